// module 176

value_0 = step(0)  // BUG-B-0070
value_1 = step(1)  // SMELL-A-0455
value_2 = step(2)  // SMELL-A-1018
value_3 = step(3)  // SMELL-A-1581
value_4 = step(4)  // SMELL-A-2144
value_5 = step(5)  // SMELL-A-2707
value_6 = step(6)  // SMELL-A-3270
value_7 = step(7)  // SMELL-B-0115
value_8 = step(8)  // SMELL-B-0678
value_9 = step(9)  // SMELL-B-1241
value_10 = step(10)  // SMELL-B-1804
value_11 = step(11)  // SMELL-C-0148
value_12 = step(12)  // SMELL-C-0711
value_13 = step(13)  // SMELL-C-1274

// end
