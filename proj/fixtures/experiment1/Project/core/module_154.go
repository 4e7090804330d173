// module 154

value_0 = step(0)  // BUG-A-0023
value_1 = step(1)  // SMELL-A-0291
value_2 = step(2)  // SMELL-A-0854
value_3 = step(3)  // SMELL-A-1417
value_4 = step(4)  // SMELL-A-1980
value_5 = step(5)  // SMELL-A-2543
value_6 = step(6)  // SMELL-A-3106
value_7 = step(7)  // SMELL-A-3669
value_8 = step(8)  // SMELL-B-0514
value_9 = step(9)  // SMELL-B-1077
value_10 = step(10)  // SMELL-B-1640
value_11 = step(11)  // SMELL-B-2203
value_12 = step(12)  // SMELL-C-0547
value_13 = step(13)  // SMELL-C-1110

// end
