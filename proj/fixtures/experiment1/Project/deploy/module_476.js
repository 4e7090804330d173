// module 476

value_0 = step(0)  // BUG-A-0069
value_1 = step(1)  // SMELL-A-0337
value_2 = step(2)  // SMELL-A-0900
value_3 = step(3)  // SMELL-A-1463
value_4 = step(4)  // SMELL-A-2026
value_5 = step(5)  // SMELL-A-2589
value_6 = step(6)  // SMELL-A-3152
value_7 = step(7)  // SMELL-A-3715
value_8 = step(8)  // SMELL-B-0560
value_9 = step(9)  // SMELL-B-1123
value_10 = step(10)  // SMELL-B-1686
value_11 = step(11)  // SMELL-C-0030
value_12 = step(12)  // SMELL-C-0593
value_13 = step(13)  // SMELL-C-1156

// end
