// module 291

value_0 = step(0)  // BUG-B-0006
value_1 = step(1)  // SMELL-A-0391
value_2 = step(2)  // SMELL-A-0954
value_3 = step(3)  // SMELL-A-1517
value_4 = step(4)  // SMELL-A-2080
value_5 = step(5)  // SMELL-A-2643
value_6 = step(6)  // SMELL-A-3206
value_7 = step(7)  // SMELL-B-0051
value_8 = step(8)  // SMELL-B-0614
value_9 = step(9)  // SMELL-B-1177
value_10 = step(10)  // SMELL-B-1740
value_11 = step(11)  // SMELL-C-0084
value_12 = step(12)  // SMELL-C-0647
value_13 = step(13)  // SMELL-C-1210

// end
