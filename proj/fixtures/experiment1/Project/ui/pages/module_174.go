// module 174

value_0 = step(0)  // SMELL-A-0133
value_1 = step(1)  // SMELL-A-0696
value_2 = step(2)  // SMELL-A-1259
value_3 = step(3)  // SMELL-A-1822
value_4 = step(4)  // SMELL-A-2385
value_5 = step(5)  // SMELL-A-2948
value_6 = step(6)  // SMELL-A-3511
value_7 = step(7)  // SMELL-B-0356
value_8 = step(8)  // SMELL-B-0919
value_9 = step(9)  // SMELL-B-1482
value_10 = step(10)  // SMELL-B-2045
value_11 = step(11)  // SMELL-C-0389
value_12 = step(12)  // SMELL-C-0952

// end
