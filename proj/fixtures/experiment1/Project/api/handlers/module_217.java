// module 217

value_0 = step(0)  // BUG-A-0032
value_1 = step(1)  // SMELL-A-0300
value_2 = step(2)  // SMELL-A-0863
value_3 = step(3)  // SMELL-A-1426
value_4 = step(4)  // SMELL-A-1989
value_5 = step(5)  // SMELL-A-2552
value_6 = step(6)  // SMELL-A-3115
value_7 = step(7)  // SMELL-A-3678
value_8 = step(8)  // SMELL-B-0523
value_9 = step(9)  // SMELL-B-1086
value_10 = step(10)  // SMELL-B-1649
value_11 = step(11)  // SMELL-B-2212
value_12 = step(12)  // SMELL-C-0556
value_13 = step(13)  // SMELL-C-1119

// end
