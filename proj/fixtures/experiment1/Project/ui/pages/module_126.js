// module 126

value_0 = step(0)  // BUG-A-0019
value_1 = step(1)  // SMELL-A-0287
value_2 = step(2)  // SMELL-A-0850
value_3 = step(3)  // SMELL-A-1413
value_4 = step(4)  // SMELL-A-1976
value_5 = step(5)  // SMELL-A-2539
value_6 = step(6)  // SMELL-A-3102
value_7 = step(7)  // SMELL-A-3665
value_8 = step(8)  // SMELL-B-0510
value_9 = step(9)  // SMELL-B-1073
value_10 = step(10)  // SMELL-B-1636
value_11 = step(11)  // SMELL-B-2199
value_12 = step(12)  // SMELL-C-0543
value_13 = step(13)  // SMELL-C-1106

// end
