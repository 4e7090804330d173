// module 421

value_0 = step(0)  // BUG-B-0105
value_1 = step(1)  // SMELL-A-0490
value_2 = step(2)  // SMELL-A-1053
value_3 = step(3)  // SMELL-A-1616
value_4 = step(4)  // SMELL-A-2179
value_5 = step(5)  // SMELL-A-2742
value_6 = step(6)  // SMELL-A-3305
value_7 = step(7)  // SMELL-B-0150
value_8 = step(8)  // SMELL-B-0713
value_9 = step(9)  // SMELL-B-1276
value_10 = step(10)  // SMELL-B-1839
value_11 = step(11)  // SMELL-C-0183
value_12 = step(12)  // SMELL-C-0746
value_13 = step(13)  // SMELL-C-1309

// end
