// module 302

value_0 = step(0)  // BUG-B-0088
value_1 = step(1)  // SMELL-A-0473
value_2 = step(2)  // SMELL-A-1036
value_3 = step(3)  // SMELL-A-1599
value_4 = step(4)  // SMELL-A-2162
value_5 = step(5)  // SMELL-A-2725
value_6 = step(6)  // SMELL-A-3288
value_7 = step(7)  // SMELL-B-0133
value_8 = step(8)  // SMELL-B-0696
value_9 = step(9)  // SMELL-B-1259
value_10 = step(10)  // SMELL-B-1822
value_11 = step(11)  // SMELL-C-0166
value_12 = step(12)  // SMELL-C-0729
value_13 = step(13)  // SMELL-C-1292

// end
