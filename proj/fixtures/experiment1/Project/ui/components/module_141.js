// module 141

value_0 = step(0)  // BUG-B-0065
value_1 = step(1)  // SMELL-A-0450
value_2 = step(2)  // SMELL-A-1013
value_3 = step(3)  // SMELL-A-1576
value_4 = step(4)  // SMELL-A-2139
value_5 = step(5)  // SMELL-A-2702
value_6 = step(6)  // SMELL-A-3265
value_7 = step(7)  // SMELL-B-0110
value_8 = step(8)  // SMELL-B-0673
value_9 = step(9)  // SMELL-B-1236
value_10 = step(10)  // SMELL-B-1799
value_11 = step(11)  // SMELL-C-0143
value_12 = step(12)  // SMELL-C-0706
value_13 = step(13)  // SMELL-C-1269

// end
