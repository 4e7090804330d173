// module 211

value_0 = step(0)  // BUG-B-0075
value_1 = step(1)  // SMELL-A-0460
value_2 = step(2)  // SMELL-A-1023
value_3 = step(3)  // SMELL-A-1586
value_4 = step(4)  // SMELL-A-2149
value_5 = step(5)  // SMELL-A-2712
value_6 = step(6)  // SMELL-A-3275
value_7 = step(7)  // SMELL-B-0120
value_8 = step(8)  // SMELL-B-0683
value_9 = step(9)  // SMELL-B-1246
value_10 = step(10)  // SMELL-B-1809
value_11 = step(11)  // SMELL-C-0153
value_12 = step(12)  // SMELL-C-0716
value_13 = step(13)  // SMELL-C-1279

// end
