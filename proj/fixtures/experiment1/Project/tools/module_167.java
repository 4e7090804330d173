// module 167

value_0 = step(0)  // SMELL-A-0132
value_1 = step(1)  // SMELL-A-0695
value_2 = step(2)  // SMELL-A-1258
value_3 = step(3)  // SMELL-A-1821
value_4 = step(4)  // SMELL-A-2384
value_5 = step(5)  // SMELL-A-2947
value_6 = step(6)  // SMELL-A-3510
value_7 = step(7)  // SMELL-B-0355
value_8 = step(8)  // SMELL-B-0918
value_9 = step(9)  // SMELL-B-1481
value_10 = step(10)  // SMELL-B-2044
value_11 = step(11)  // SMELL-C-0388
value_12 = step(12)  // SMELL-C-0951

// end
