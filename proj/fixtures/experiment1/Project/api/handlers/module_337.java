// module 337

value_0 = step(0)  // BUG-B-0093
value_1 = step(1)  // SMELL-A-0478
value_2 = step(2)  // SMELL-A-1041
value_3 = step(3)  // SMELL-A-1604
value_4 = step(4)  // SMELL-A-2167
value_5 = step(5)  // SMELL-A-2730
value_6 = step(6)  // SMELL-A-3293
value_7 = step(7)  // SMELL-B-0138
value_8 = step(8)  // SMELL-B-0701
value_9 = step(9)  // SMELL-B-1264
value_10 = step(10)  // SMELL-B-1827
value_11 = step(11)  // SMELL-C-0171
value_12 = step(12)  // SMELL-C-0734
value_13 = step(13)  // SMELL-C-1297

// end
