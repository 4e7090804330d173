// module 544

value_0 = step(0)  // SMELL-A-0025
value_1 = step(1)  // SMELL-A-0588
value_2 = step(2)  // SMELL-A-1151
value_3 = step(3)  // SMELL-A-1714
value_4 = step(4)  // SMELL-A-2277
value_5 = step(5)  // SMELL-A-2840
value_6 = step(6)  // SMELL-A-3403
value_7 = step(7)  // SMELL-B-0248
value_8 = step(8)  // SMELL-B-0811
value_9 = step(9)  // SMELL-B-1374
value_10 = step(10)  // SMELL-B-1937
value_11 = step(11)  // SMELL-C-0281
value_12 = step(12)  // SMELL-C-0844

// end
