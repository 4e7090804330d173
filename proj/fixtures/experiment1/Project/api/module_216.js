// module 216

value_0 = step(0)  // SMELL-A-0139
value_1 = step(1)  // SMELL-A-0702
value_2 = step(2)  // SMELL-A-1265
value_3 = step(3)  // SMELL-A-1828
value_4 = step(4)  // SMELL-A-2391
value_5 = step(5)  // SMELL-A-2954
value_6 = step(6)  // SMELL-A-3517
value_7 = step(7)  // SMELL-B-0362
value_8 = step(8)  // SMELL-B-0925
value_9 = step(9)  // SMELL-B-1488
value_10 = step(10)  // SMELL-B-2051
value_11 = step(11)  // SMELL-C-0395
value_12 = step(12)  // SMELL-C-0958

// end
