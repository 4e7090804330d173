// module 162

value_0 = step(0)  // BUG-B-0068
value_1 = step(1)  // SMELL-A-0453
value_2 = step(2)  // SMELL-A-1016
value_3 = step(3)  // SMELL-A-1579
value_4 = step(4)  // SMELL-A-2142
value_5 = step(5)  // SMELL-A-2705
value_6 = step(6)  // SMELL-A-3268
value_7 = step(7)  // SMELL-B-0113
value_8 = step(8)  // SMELL-B-0676
value_9 = step(9)  // SMELL-B-1239
value_10 = step(10)  // SMELL-B-1802
value_11 = step(11)  // SMELL-C-0146
value_12 = step(12)  // SMELL-C-0709
value_13 = step(13)  // SMELL-C-1272

// end
