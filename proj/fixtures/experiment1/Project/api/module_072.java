// module 072

value_0 = step(0)  // SMELL-A-0038
value_1 = step(1)  // SMELL-A-0601
value_2 = step(2)  // SMELL-A-1164
value_3 = step(3)  // SMELL-A-1727
value_4 = step(4)  // SMELL-A-2290
value_5 = step(5)  // SMELL-A-2853
value_6 = step(6)  // SMELL-A-3416
value_7 = step(7)  // SMELL-B-0261
value_8 = step(8)  // SMELL-B-0824
value_9 = step(9)  // SMELL-B-1387
value_10 = step(10)  // SMELL-B-1950
value_11 = step(11)  // SMELL-C-0294
value_12 = step(12)  // SMELL-C-0857

// end
