// module 504

value_0 = step(0)  // BUG-A-0073
value_1 = step(1)  // SMELL-A-0341
value_2 = step(2)  // SMELL-A-0904
value_3 = step(3)  // SMELL-A-1467
value_4 = step(4)  // SMELL-A-2030
value_5 = step(5)  // SMELL-A-2593
value_6 = step(6)  // SMELL-A-3156
value_7 = step(7)  // SMELL-B-0001
value_8 = step(8)  // SMELL-B-0564
value_9 = step(9)  // SMELL-B-1127
value_10 = step(10)  // SMELL-B-1690
value_11 = step(11)  // SMELL-C-0034
value_12 = step(12)  // SMELL-C-0597
value_13 = step(13)  // SMELL-C-1160

// end
