// module 224

value_0 = step(0)  // BUG-A-0033
value_1 = step(1)  // SMELL-A-0301
value_2 = step(2)  // SMELL-A-0864
value_3 = step(3)  // SMELL-A-1427
value_4 = step(4)  // SMELL-A-1990
value_5 = step(5)  // SMELL-A-2553
value_6 = step(6)  // SMELL-A-3116
value_7 = step(7)  // SMELL-A-3679
value_8 = step(8)  // SMELL-B-0524
value_9 = step(9)  // SMELL-B-1087
value_10 = step(10)  // SMELL-B-1650
value_11 = step(11)  // SMELL-B-2213
value_12 = step(12)  // SMELL-C-0557
value_13 = step(13)  // SMELL-C-1120

// end
