// module 182

value_0 = step(0)  // BUG-A-0027
value_1 = step(1)  // SMELL-A-0295
value_2 = step(2)  // SMELL-A-0858
value_3 = step(3)  // SMELL-A-1421
value_4 = step(4)  // SMELL-A-1984
value_5 = step(5)  // SMELL-A-2547
value_6 = step(6)  // SMELL-A-3110
value_7 = step(7)  // SMELL-A-3673
value_8 = step(8)  // SMELL-B-0518
value_9 = step(9)  // SMELL-B-1081
value_10 = step(10)  // SMELL-B-1644
value_11 = step(11)  // SMELL-B-2207
value_12 = step(12)  // SMELL-C-0551
value_13 = step(13)  // SMELL-C-1114

// end
