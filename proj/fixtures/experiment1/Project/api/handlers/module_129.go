// module 129

value_0 = step(0)  // SMELL-A-0207
value_1 = step(1)  // SMELL-A-0770
value_2 = step(2)  // SMELL-A-1333
value_3 = step(3)  // SMELL-A-1896
value_4 = step(4)  // SMELL-A-2459
value_5 = step(5)  // SMELL-A-3022
value_6 = step(6)  // SMELL-A-3585
value_7 = step(7)  // SMELL-B-0430
value_8 = step(8)  // SMELL-B-0993
value_9 = step(9)  // SMELL-B-1556
value_10 = step(10)  // SMELL-B-2119
value_11 = step(11)  // SMELL-C-0463
value_12 = step(12)  // SMELL-C-1026

// end
