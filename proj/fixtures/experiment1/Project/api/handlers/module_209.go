// module 209

value_0 = step(0)  // SMELL-A-0138
value_1 = step(1)  // SMELL-A-0701
value_2 = step(2)  // SMELL-A-1264
value_3 = step(3)  // SMELL-A-1827
value_4 = step(4)  // SMELL-A-2390
value_5 = step(5)  // SMELL-A-2953
value_6 = step(6)  // SMELL-A-3516
value_7 = step(7)  // SMELL-B-0361
value_8 = step(8)  // SMELL-B-0924
value_9 = step(9)  // SMELL-B-1487
value_10 = step(10)  // SMELL-B-2050
value_11 = step(11)  // SMELL-C-0394
value_12 = step(12)  // SMELL-C-0957

// end
