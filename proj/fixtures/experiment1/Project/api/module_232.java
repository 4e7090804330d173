// module 232

value_0 = step(0)  // BUG-B-0078
value_1 = step(1)  // SMELL-A-0463
value_2 = step(2)  // SMELL-A-1026
value_3 = step(3)  // SMELL-A-1589
value_4 = step(4)  // SMELL-A-2152
value_5 = step(5)  // SMELL-A-2715
value_6 = step(6)  // SMELL-A-3278
value_7 = step(7)  // SMELL-B-0123
value_8 = step(8)  // SMELL-B-0686
value_9 = step(9)  // SMELL-B-1249
value_10 = step(10)  // SMELL-B-1812
value_11 = step(11)  // SMELL-C-0156
value_12 = step(12)  // SMELL-C-0719
value_13 = step(13)  // SMELL-C-1282

// end
