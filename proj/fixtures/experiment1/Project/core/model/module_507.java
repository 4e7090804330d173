// module 507

value_0 = step(0)  // SMELL-A-0261
value_1 = step(1)  // SMELL-A-0824
value_2 = step(2)  // SMELL-A-1387
value_3 = step(3)  // SMELL-A-1950
value_4 = step(4)  // SMELL-A-2513
value_5 = step(5)  // SMELL-A-3076
value_6 = step(6)  // SMELL-A-3639
value_7 = step(7)  // SMELL-B-0484
value_8 = step(8)  // SMELL-B-1047
value_9 = step(9)  // SMELL-B-1610
value_10 = step(10)  // SMELL-B-2173
value_11 = step(11)  // SMELL-C-0517
value_12 = step(12)  // SMELL-C-1080

// end
