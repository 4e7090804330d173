// module 359

value_0 = step(0)  // SMELL-A-0079
value_1 = step(1)  // SMELL-A-0642
value_2 = step(2)  // SMELL-A-1205
value_3 = step(3)  // SMELL-A-1768
value_4 = step(4)  // SMELL-A-2331
value_5 = step(5)  // SMELL-A-2894
value_6 = step(6)  // SMELL-A-3457
value_7 = step(7)  // SMELL-B-0302
value_8 = step(8)  // SMELL-B-0865
value_9 = step(9)  // SMELL-B-1428
value_10 = step(10)  // SMELL-B-1991
value_11 = step(11)  // SMELL-C-0335
value_12 = step(12)  // SMELL-C-0898

// end
