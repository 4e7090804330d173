// module 397

value_0 = step(0)  // SMELL-A-0004
value_1 = step(1)  // SMELL-A-0567
value_2 = step(2)  // SMELL-A-1130
value_3 = step(3)  // SMELL-A-1693
value_4 = step(4)  // SMELL-A-2256
value_5 = step(5)  // SMELL-A-2819
value_6 = step(6)  // SMELL-A-3382
value_7 = step(7)  // SMELL-B-0227
value_8 = step(8)  // SMELL-B-0790
value_9 = step(9)  // SMELL-B-1353
value_10 = step(10)  // SMELL-B-1916
value_11 = step(11)  // SMELL-C-0260
value_12 = step(12)  // SMELL-C-0823

// end
