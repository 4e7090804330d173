// module 259

value_0 = step(0)  // BUG-A-0038
value_1 = step(1)  // SMELL-A-0306
value_2 = step(2)  // SMELL-A-0869
value_3 = step(3)  // SMELL-A-1432
value_4 = step(4)  // SMELL-A-1995
value_5 = step(5)  // SMELL-A-2558
value_6 = step(6)  // SMELL-A-3121
value_7 = step(7)  // SMELL-A-3684
value_8 = step(8)  // SMELL-B-0529
value_9 = step(9)  // SMELL-B-1092
value_10 = step(10)  // SMELL-B-1655
value_11 = step(11)  // SMELL-B-2218
value_12 = step(12)  // SMELL-C-0562
value_13 = step(13)  // SMELL-C-1125

// end
