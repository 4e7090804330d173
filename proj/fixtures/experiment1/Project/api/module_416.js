// module 416

value_0 = step(0)  // SMELL-A-0248
value_1 = step(1)  // SMELL-A-0811
value_2 = step(2)  // SMELL-A-1374
value_3 = step(3)  // SMELL-A-1937
value_4 = step(4)  // SMELL-A-2500
value_5 = step(5)  // SMELL-A-3063
value_6 = step(6)  // SMELL-A-3626
value_7 = step(7)  // SMELL-B-0471
value_8 = step(8)  // SMELL-B-1034
value_9 = step(9)  // SMELL-B-1597
value_10 = step(10)  // SMELL-B-2160
value_11 = step(11)  // SMELL-C-0504
value_12 = step(12)  // SMELL-C-1067

// end
