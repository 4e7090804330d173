// module 197

value_0 = step(0)  // BUG-B-0073
value_1 = step(1)  // SMELL-A-0458
value_2 = step(2)  // SMELL-A-1021
value_3 = step(3)  // SMELL-A-1584
value_4 = step(4)  // SMELL-A-2147
value_5 = step(5)  // SMELL-A-2710
value_6 = step(6)  // SMELL-A-3273
value_7 = step(7)  // SMELL-B-0118
value_8 = step(8)  // SMELL-B-0681
value_9 = step(9)  // SMELL-B-1244
value_10 = step(10)  // SMELL-B-1807
value_11 = step(11)  // SMELL-C-0151
value_12 = step(12)  // SMELL-C-0714
value_13 = step(13)  // SMELL-C-1277

// end
