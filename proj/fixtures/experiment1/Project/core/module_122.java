// module 122

value_0 = step(0)  // SMELL-A-0206
value_1 = step(1)  // SMELL-A-0769
value_2 = step(2)  // SMELL-A-1332
value_3 = step(3)  // SMELL-A-1895
value_4 = step(4)  // SMELL-A-2458
value_5 = step(5)  // SMELL-A-3021
value_6 = step(6)  // SMELL-A-3584
value_7 = step(7)  // SMELL-B-0429
value_8 = step(8)  // SMELL-B-0992
value_9 = step(9)  // SMELL-B-1555
value_10 = step(10)  // SMELL-B-2118
value_11 = step(11)  // SMELL-C-0462
value_12 = step(12)  // SMELL-C-1025

// end
