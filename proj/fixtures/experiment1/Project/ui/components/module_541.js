// module 541

value_0 = step(0)  // SMELL-A-0105
value_1 = step(1)  // SMELL-A-0668
value_2 = step(2)  // SMELL-A-1231
value_3 = step(3)  // SMELL-A-1794
value_4 = step(4)  // SMELL-A-2357
value_5 = step(5)  // SMELL-A-2920
value_6 = step(6)  // SMELL-A-3483
value_7 = step(7)  // SMELL-B-0328
value_8 = step(8)  // SMELL-B-0891
value_9 = step(9)  // SMELL-B-1454
value_10 = step(10)  // SMELL-B-2017
value_11 = step(11)  // SMELL-C-0361
value_12 = step(12)  // SMELL-C-0924

// end
