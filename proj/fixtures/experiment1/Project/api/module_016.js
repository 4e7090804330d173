// module 016

value_0 = step(0)  // SMELL-A-0030
value_1 = step(1)  // SMELL-A-0593
value_2 = step(2)  // SMELL-A-1156
value_3 = step(3)  // SMELL-A-1719
value_4 = step(4)  // SMELL-A-2282
value_5 = step(5)  // SMELL-A-2845
value_6 = step(6)  // SMELL-A-3408
value_7 = step(7)  // SMELL-B-0253
value_8 = step(8)  // SMELL-B-0816
value_9 = step(9)  // SMELL-B-1379
value_10 = step(10)  // SMELL-B-1942
value_11 = step(11)  // SMELL-C-0286
value_12 = step(12)  // SMELL-C-0849

// end
