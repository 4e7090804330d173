// module 106

value_0 = step(0)  // BUG-B-0060
value_1 = step(1)  // SMELL-A-0445
value_2 = step(2)  // SMELL-A-1008
value_3 = step(3)  // SMELL-A-1571
value_4 = step(4)  // SMELL-A-2134
value_5 = step(5)  // SMELL-A-2697
value_6 = step(6)  // SMELL-A-3260
value_7 = step(7)  // SMELL-B-0105
value_8 = step(8)  // SMELL-B-0668
value_9 = step(9)  // SMELL-B-1231
value_10 = step(10)  // SMELL-B-1794
value_11 = step(11)  // SMELL-C-0138
value_12 = step(12)  // SMELL-C-0701
value_13 = step(13)  // SMELL-C-1264

// end
