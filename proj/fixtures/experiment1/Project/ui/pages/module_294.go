// module 294

value_0 = step(0)  // BUG-A-0043
value_1 = step(1)  // SMELL-A-0311
value_2 = step(2)  // SMELL-A-0874
value_3 = step(3)  // SMELL-A-1437
value_4 = step(4)  // SMELL-A-2000
value_5 = step(5)  // SMELL-A-2563
value_6 = step(6)  // SMELL-A-3126
value_7 = step(7)  // SMELL-A-3689
value_8 = step(8)  // SMELL-B-0534
value_9 = step(9)  // SMELL-B-1097
value_10 = step(10)  // SMELL-B-1660
value_11 = step(11)  // SMELL-C-0004
value_12 = step(12)  // SMELL-C-0567
value_13 = step(13)  // SMELL-C-1130

// end
