// module 246

value_0 = step(0)  // BUG-B-0080
value_1 = step(1)  // SMELL-A-0465
value_2 = step(2)  // SMELL-A-1028
value_3 = step(3)  // SMELL-A-1591
value_4 = step(4)  // SMELL-A-2154
value_5 = step(5)  // SMELL-A-2717
value_6 = step(6)  // SMELL-A-3280
value_7 = step(7)  // SMELL-B-0125
value_8 = step(8)  // SMELL-B-0688
value_9 = step(9)  // SMELL-B-1251
value_10 = step(10)  // SMELL-B-1814
value_11 = step(11)  // SMELL-C-0158
value_12 = step(12)  // SMELL-C-0721
value_13 = step(13)  // SMELL-C-1284

// end
