// module 312

value_0 = step(0)  // BUG-B-0009
value_1 = step(1)  // SMELL-A-0394
value_2 = step(2)  // SMELL-A-0957
value_3 = step(3)  // SMELL-A-1520
value_4 = step(4)  // SMELL-A-2083
value_5 = step(5)  // SMELL-A-2646
value_6 = step(6)  // SMELL-A-3209
value_7 = step(7)  // SMELL-B-0054
value_8 = step(8)  // SMELL-B-0617
value_9 = step(9)  // SMELL-B-1180
value_10 = step(10)  // SMELL-B-1743
value_11 = step(11)  // SMELL-C-0087
value_12 = step(12)  // SMELL-C-0650
value_13 = step(13)  // SMELL-C-1213

// end
