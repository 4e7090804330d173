// module 332

value_0 = step(0)  // SMELL-A-0236
value_1 = step(1)  // SMELL-A-0799
value_2 = step(2)  // SMELL-A-1362
value_3 = step(3)  // SMELL-A-1925
value_4 = step(4)  // SMELL-A-2488
value_5 = step(5)  // SMELL-A-3051
value_6 = step(6)  // SMELL-A-3614
value_7 = step(7)  // SMELL-B-0459
value_8 = step(8)  // SMELL-B-1022
value_9 = step(9)  // SMELL-B-1585
value_10 = step(10)  // SMELL-B-2148
value_11 = step(11)  // SMELL-C-0492
value_12 = step(12)  // SMELL-C-1055

// end
