// module 422

value_0 = step(0)  // SMELL-A-0088
value_1 = step(1)  // SMELL-A-0651
value_2 = step(2)  // SMELL-A-1214
value_3 = step(3)  // SMELL-A-1777
value_4 = step(4)  // SMELL-A-2340
value_5 = step(5)  // SMELL-A-2903
value_6 = step(6)  // SMELL-A-3466
value_7 = step(7)  // SMELL-B-0311
value_8 = step(8)  // SMELL-B-0874
value_9 = step(9)  // SMELL-B-1437
value_10 = step(10)  // SMELL-B-2000
value_11 = step(11)  // SMELL-C-0344
value_12 = step(12)  // SMELL-C-0907

// end
