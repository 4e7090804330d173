// module 446

value_0 = step(0)  // SMELL-A-0011
value_1 = step(1)  // SMELL-A-0574
value_2 = step(2)  // SMELL-A-1137
value_3 = step(3)  // SMELL-A-1700
value_4 = step(4)  // SMELL-A-2263
value_5 = step(5)  // SMELL-A-2826
value_6 = step(6)  // SMELL-A-3389
value_7 = step(7)  // SMELL-B-0234
value_8 = step(8)  // SMELL-B-0797
value_9 = step(9)  // SMELL-B-1360
value_10 = step(10)  // SMELL-B-1923
value_11 = step(11)  // SMELL-C-0267
value_12 = step(12)  // SMELL-C-0830

// end
