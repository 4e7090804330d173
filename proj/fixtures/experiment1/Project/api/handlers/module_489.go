// module 489

value_0 = step(0)  // SMELL-A-0178
value_1 = step(1)  // SMELL-A-0741
value_2 = step(2)  // SMELL-A-1304
value_3 = step(3)  // SMELL-A-1867
value_4 = step(4)  // SMELL-A-2430
value_5 = step(5)  // SMELL-A-2993
value_6 = step(6)  // SMELL-A-3556
value_7 = step(7)  // SMELL-B-0401
value_8 = step(8)  // SMELL-B-0964
value_9 = step(9)  // SMELL-B-1527
value_10 = step(10)  // SMELL-B-2090
value_11 = step(11)  // SMELL-C-0434
value_12 = step(12)  // SMELL-C-0997

// end
