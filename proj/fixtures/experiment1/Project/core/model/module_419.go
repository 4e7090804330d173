// module 419

value_0 = step(0)  // SMELL-A-0168
value_1 = step(1)  // SMELL-A-0731
value_2 = step(2)  // SMELL-A-1294
value_3 = step(3)  // SMELL-A-1857
value_4 = step(4)  // SMELL-A-2420
value_5 = step(5)  // SMELL-A-2983
value_6 = step(6)  // SMELL-A-3546
value_7 = step(7)  // SMELL-B-0391
value_8 = step(8)  // SMELL-B-0954
value_9 = step(9)  // SMELL-B-1517
value_10 = step(10)  // SMELL-B-2080
value_11 = step(11)  // SMELL-C-0424
value_12 = step(12)  // SMELL-C-0987

// end
