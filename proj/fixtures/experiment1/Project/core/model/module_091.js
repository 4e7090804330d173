// module 091

value_0 = step(0)  // BUG-A-0014
value_1 = step(1)  // SMELL-A-0282
value_2 = step(2)  // SMELL-A-0845
value_3 = step(3)  // SMELL-A-1408
value_4 = step(4)  // SMELL-A-1971
value_5 = step(5)  // SMELL-A-2534
value_6 = step(6)  // SMELL-A-3097
value_7 = step(7)  // SMELL-A-3660
value_8 = step(8)  // SMELL-B-0505
value_9 = step(9)  // SMELL-B-1068
value_10 = step(10)  // SMELL-B-1631
value_11 = step(11)  // SMELL-B-2194
value_12 = step(12)  // SMELL-C-0538
value_13 = step(13)  // SMELL-C-1101

// end
