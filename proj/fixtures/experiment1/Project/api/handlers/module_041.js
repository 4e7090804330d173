// module 041

value_0 = step(0)  // SMELL-A-0114
value_1 = step(1)  // SMELL-A-0677
value_2 = step(2)  // SMELL-A-1240
value_3 = step(3)  // SMELL-A-1803
value_4 = step(4)  // SMELL-A-2366
value_5 = step(5)  // SMELL-A-2929
value_6 = step(6)  // SMELL-A-3492
value_7 = step(7)  // SMELL-B-0337
value_8 = step(8)  // SMELL-B-0900
value_9 = step(9)  // SMELL-B-1463
value_10 = step(10)  // SMELL-B-2026
value_11 = step(11)  // SMELL-C-0370
value_12 = step(12)  // SMELL-C-0933

// end
