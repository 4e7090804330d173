// module 219

value_0 = step(0)  // SMELL-A-0059
value_1 = step(1)  // SMELL-A-0622
value_2 = step(2)  // SMELL-A-1185
value_3 = step(3)  // SMELL-A-1748
value_4 = step(4)  // SMELL-A-2311
value_5 = step(5)  // SMELL-A-2874
value_6 = step(6)  // SMELL-A-3437
value_7 = step(7)  // SMELL-B-0282
value_8 = step(8)  // SMELL-B-0845
value_9 = step(9)  // SMELL-B-1408
value_10 = step(10)  // SMELL-B-1971
value_11 = step(11)  // SMELL-C-0315
value_12 = step(12)  // SMELL-C-0878

// end
