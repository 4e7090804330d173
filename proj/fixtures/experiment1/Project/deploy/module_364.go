// module 364

value_0 = step(0)  // BUG-A-0053
value_1 = step(1)  // SMELL-A-0321
value_2 = step(2)  // SMELL-A-0884
value_3 = step(3)  // SMELL-A-1447
value_4 = step(4)  // SMELL-A-2010
value_5 = step(5)  // SMELL-A-2573
value_6 = step(6)  // SMELL-A-3136
value_7 = step(7)  // SMELL-A-3699
value_8 = step(8)  // SMELL-B-0544
value_9 = step(9)  // SMELL-B-1107
value_10 = step(10)  // SMELL-B-1670
value_11 = step(11)  // SMELL-C-0014
value_12 = step(12)  // SMELL-C-0577
value_13 = step(13)  // SMELL-C-1140

// end
