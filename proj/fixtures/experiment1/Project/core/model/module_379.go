// module 379

value_0 = step(0)  // BUG-B-0099
value_1 = step(1)  // SMELL-A-0484
value_2 = step(2)  // SMELL-A-1047
value_3 = step(3)  // SMELL-A-1610
value_4 = step(4)  // SMELL-A-2173
value_5 = step(5)  // SMELL-A-2736
value_6 = step(6)  // SMELL-A-3299
value_7 = step(7)  // SMELL-B-0144
value_8 = step(8)  // SMELL-B-0707
value_9 = step(9)  // SMELL-B-1270
value_10 = step(10)  // SMELL-B-1833
value_11 = step(11)  // SMELL-C-0177
value_12 = step(12)  // SMELL-C-0740
value_13 = step(13)  // SMELL-C-1303

// end
