// module 046

value_0 = step(0)  // BUG-A-0088
value_1 = step(1)  // SMELL-A-0356
value_2 = step(2)  // SMELL-A-0919
value_3 = step(3)  // SMELL-A-1482
value_4 = step(4)  // SMELL-A-2045
value_5 = step(5)  // SMELL-A-2608
value_6 = step(6)  // SMELL-A-3171
value_7 = step(7)  // SMELL-B-0016
value_8 = step(8)  // SMELL-B-0579
value_9 = step(9)  // SMELL-B-1142
value_10 = step(10)  // SMELL-B-1705
value_11 = step(11)  // SMELL-C-0049
value_12 = step(12)  // SMELL-C-0612
value_13 = step(13)  // SMELL-C-1175

// end
