// module 212

value_0 = step(0)  // SMELL-A-0058
value_1 = step(1)  // SMELL-A-0621
value_2 = step(2)  // SMELL-A-1184
value_3 = step(3)  // SMELL-A-1747
value_4 = step(4)  // SMELL-A-2310
value_5 = step(5)  // SMELL-A-2873
value_6 = step(6)  // SMELL-A-3436
value_7 = step(7)  // SMELL-B-0281
value_8 = step(8)  // SMELL-B-0844
value_9 = step(9)  // SMELL-B-1407
value_10 = step(10)  // SMELL-B-1970
value_11 = step(11)  // SMELL-C-0314
value_12 = step(12)  // SMELL-C-0877

// end
