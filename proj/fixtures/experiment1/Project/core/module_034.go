// module 034

value_0 = step(0)  // SMELL-A-0113
value_1 = step(1)  // SMELL-A-0676
value_2 = step(2)  // SMELL-A-1239
value_3 = step(3)  // SMELL-A-1802
value_4 = step(4)  // SMELL-A-2365
value_5 = step(5)  // SMELL-A-2928
value_6 = step(6)  // SMELL-A-3491
value_7 = step(7)  // SMELL-B-0336
value_8 = step(8)  // SMELL-B-0899
value_9 = step(9)  // SMELL-B-1462
value_10 = step(10)  // SMELL-B-2025
value_11 = step(11)  // SMELL-C-0369
value_12 = step(12)  // SMELL-C-0932

// end
