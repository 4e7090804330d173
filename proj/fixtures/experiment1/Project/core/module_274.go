// module 274

value_0 = step(0)  // BUG-B-0084
value_1 = step(1)  // SMELL-A-0469
value_2 = step(2)  // SMELL-A-1032
value_3 = step(3)  // SMELL-A-1595
value_4 = step(4)  // SMELL-A-2158
value_5 = step(5)  // SMELL-A-2721
value_6 = step(6)  // SMELL-A-3284
value_7 = step(7)  // SMELL-B-0129
value_8 = step(8)  // SMELL-B-0692
value_9 = step(9)  // SMELL-B-1255
value_10 = step(10)  // SMELL-B-1818
value_11 = step(11)  // SMELL-C-0162
value_12 = step(12)  // SMELL-C-0725
value_13 = step(13)  // SMELL-C-1288

// end
