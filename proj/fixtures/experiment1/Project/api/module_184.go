// module 184

value_0 = step(0)  // SMELL-A-0054
value_1 = step(1)  // SMELL-A-0617
value_2 = step(2)  // SMELL-A-1180
value_3 = step(3)  // SMELL-A-1743
value_4 = step(4)  // SMELL-A-2306
value_5 = step(5)  // SMELL-A-2869
value_6 = step(6)  // SMELL-A-3432
value_7 = step(7)  // SMELL-B-0277
value_8 = step(8)  // SMELL-B-0840
value_9 = step(9)  // SMELL-B-1403
value_10 = step(10)  // SMELL-B-1966
value_11 = step(11)  // SMELL-C-0310
value_12 = step(12)  // SMELL-C-0873

// end
