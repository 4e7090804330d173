// module 239

value_0 = step(0)  // BUG-B-0079
value_1 = step(1)  // SMELL-A-0464
value_2 = step(2)  // SMELL-A-1027
value_3 = step(3)  // SMELL-A-1590
value_4 = step(4)  // SMELL-A-2153
value_5 = step(5)  // SMELL-A-2716
value_6 = step(6)  // SMELL-A-3279
value_7 = step(7)  // SMELL-B-0124
value_8 = step(8)  // SMELL-B-0687
value_9 = step(9)  // SMELL-B-1250
value_10 = step(10)  // SMELL-B-1813
value_11 = step(11)  // SMELL-C-0157
value_12 = step(12)  // SMELL-C-0720
value_13 = step(13)  // SMELL-C-1283

// end
