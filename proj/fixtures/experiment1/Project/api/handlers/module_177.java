// module 177

value_0 = step(0)  // SMELL-A-0053
value_1 = step(1)  // SMELL-A-0616
value_2 = step(2)  // SMELL-A-1179
value_3 = step(3)  // SMELL-A-1742
value_4 = step(4)  // SMELL-A-2305
value_5 = step(5)  // SMELL-A-2868
value_6 = step(6)  // SMELL-A-3431
value_7 = step(7)  // SMELL-B-0276
value_8 = step(8)  // SMELL-B-0839
value_9 = step(9)  // SMELL-B-1402
value_10 = step(10)  // SMELL-B-1965
value_11 = step(11)  // SMELL-C-0309
value_12 = step(12)  // SMELL-C-0872

// end
