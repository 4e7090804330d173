// module 011

value_0 = step(0)  // BUG-A-0083
value_1 = step(1)  // SMELL-A-0351
value_2 = step(2)  // SMELL-A-0914
value_3 = step(3)  // SMELL-A-1477
value_4 = step(4)  // SMELL-A-2040
value_5 = step(5)  // SMELL-A-2603
value_6 = step(6)  // SMELL-A-3166
value_7 = step(7)  // SMELL-B-0011
value_8 = step(8)  // SMELL-B-0574
value_9 = step(9)  // SMELL-B-1137
value_10 = step(10)  // SMELL-B-1700
value_11 = step(11)  // SMELL-C-0044
value_12 = step(12)  // SMELL-C-0607
value_13 = step(13)  // SMELL-C-1170

// end
