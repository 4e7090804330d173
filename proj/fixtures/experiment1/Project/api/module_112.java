// module 112

value_0 = step(0)  // BUG-A-0017
value_1 = step(1)  // SMELL-A-0285
value_2 = step(2)  // SMELL-A-0848
value_3 = step(3)  // SMELL-A-1411
value_4 = step(4)  // SMELL-A-1974
value_5 = step(5)  // SMELL-A-2537
value_6 = step(6)  // SMELL-A-3100
value_7 = step(7)  // SMELL-A-3663
value_8 = step(8)  // SMELL-B-0508
value_9 = step(9)  // SMELL-B-1071
value_10 = step(10)  // SMELL-B-1634
value_11 = step(11)  // SMELL-B-2197
value_12 = step(12)  // SMELL-C-0541
value_13 = step(13)  // SMELL-C-1104

// end
