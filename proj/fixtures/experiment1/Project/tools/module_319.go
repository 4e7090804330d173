// module 319

value_0 = step(0)  // BUG-B-0010
value_1 = step(1)  // SMELL-A-0395
value_2 = step(2)  // SMELL-A-0958
value_3 = step(3)  // SMELL-A-1521
value_4 = step(4)  // SMELL-A-2084
value_5 = step(5)  // SMELL-A-2647
value_6 = step(6)  // SMELL-A-3210
value_7 = step(7)  // SMELL-B-0055
value_8 = step(8)  // SMELL-B-0618
value_9 = step(9)  // SMELL-B-1181
value_10 = step(10)  // SMELL-B-1744
value_11 = step(11)  // SMELL-C-0088
value_12 = step(12)  // SMELL-C-0651
value_13 = step(13)  // SMELL-C-1214

// end
