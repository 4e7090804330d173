// module 276

value_0 = step(0)  // SMELL-A-0228
value_1 = step(1)  // SMELL-A-0791
value_2 = step(2)  // SMELL-A-1354
value_3 = step(3)  // SMELL-A-1917
value_4 = step(4)  // SMELL-A-2480
value_5 = step(5)  // SMELL-A-3043
value_6 = step(6)  // SMELL-A-3606
value_7 = step(7)  // SMELL-B-0451
value_8 = step(8)  // SMELL-B-1014
value_9 = step(9)  // SMELL-B-1577
value_10 = step(10)  // SMELL-B-2140
value_11 = step(11)  // SMELL-C-0484
value_12 = step(12)  // SMELL-C-1047

// end
