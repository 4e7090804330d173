// module 269

value_0 = step(0)  // SMELL-A-0227
value_1 = step(1)  // SMELL-A-0790
value_2 = step(2)  // SMELL-A-1353
value_3 = step(3)  // SMELL-A-1916
value_4 = step(4)  // SMELL-A-2479
value_5 = step(5)  // SMELL-A-3042
value_6 = step(6)  // SMELL-A-3605
value_7 = step(7)  // SMELL-B-0450
value_8 = step(8)  // SMELL-B-1013
value_9 = step(9)  // SMELL-B-1576
value_10 = step(10)  // SMELL-B-2139
value_11 = step(11)  // SMELL-C-0483
value_12 = step(12)  // SMELL-C-1046

// end
