// module 361

value_0 = step(0)  // BUG-B-0016
value_1 = step(1)  // SMELL-A-0401
value_2 = step(2)  // SMELL-A-0964
value_3 = step(3)  // SMELL-A-1527
value_4 = step(4)  // SMELL-A-2090
value_5 = step(5)  // SMELL-A-2653
value_6 = step(6)  // SMELL-A-3216
value_7 = step(7)  // SMELL-B-0061
value_8 = step(8)  // SMELL-B-0624
value_9 = step(9)  // SMELL-B-1187
value_10 = step(10)  // SMELL-B-1750
value_11 = step(11)  // SMELL-C-0094
value_12 = step(12)  // SMELL-C-0657
value_13 = step(13)  // SMELL-C-1220

// end
