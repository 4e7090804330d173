// module 057

value_0 = step(0)  // BUG-B-0053
value_1 = step(1)  // SMELL-A-0438
value_2 = step(2)  // SMELL-A-1001
value_3 = step(3)  // SMELL-A-1564
value_4 = step(4)  // SMELL-A-2127
value_5 = step(5)  // SMELL-A-2690
value_6 = step(6)  // SMELL-A-3253
value_7 = step(7)  // SMELL-B-0098
value_8 = step(8)  // SMELL-B-0661
value_9 = step(9)  // SMELL-B-1224
value_10 = step(10)  // SMELL-B-1787
value_11 = step(11)  // SMELL-C-0131
value_12 = step(12)  // SMELL-C-0694
value_13 = step(13)  // SMELL-C-1257

// end
