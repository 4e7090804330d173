// module 119

value_0 = step(0)  // BUG-A-0018
value_1 = step(1)  // SMELL-A-0286
value_2 = step(2)  // SMELL-A-0849
value_3 = step(3)  // SMELL-A-1412
value_4 = step(4)  // SMELL-A-1975
value_5 = step(5)  // SMELL-A-2538
value_6 = step(6)  // SMELL-A-3101
value_7 = step(7)  // SMELL-A-3664
value_8 = step(8)  // SMELL-B-0509
value_9 = step(9)  // SMELL-B-1072
value_10 = step(10)  // SMELL-B-1635
value_11 = step(11)  // SMELL-B-2198
value_12 = step(12)  // SMELL-C-0542
value_13 = step(13)  // SMELL-C-1105

// end
