// module 079

value_0 = step(0)  // SMELL-A-0039
value_1 = step(1)  // SMELL-A-0602
value_2 = step(2)  // SMELL-A-1165
value_3 = step(3)  // SMELL-A-1728
value_4 = step(4)  // SMELL-A-2291
value_5 = step(5)  // SMELL-A-2854
value_6 = step(6)  // SMELL-A-3417
value_7 = step(7)  // SMELL-B-0262
value_8 = step(8)  // SMELL-B-0825
value_9 = step(9)  // SMELL-B-1388
value_10 = step(10)  // SMELL-B-1951
value_11 = step(11)  // SMELL-C-0295
value_12 = step(12)  // SMELL-C-0858

// end
