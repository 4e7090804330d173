// module 109

value_0 = step(0)  // BUG-A-0097
value_1 = step(1)  // SMELL-A-0365
value_2 = step(2)  // SMELL-A-0928
value_3 = step(3)  // SMELL-A-1491
value_4 = step(4)  // SMELL-A-2054
value_5 = step(5)  // SMELL-A-2617
value_6 = step(6)  // SMELL-A-3180
value_7 = step(7)  // SMELL-B-0025
value_8 = step(8)  // SMELL-B-0588
value_9 = step(9)  // SMELL-B-1151
value_10 = step(10)  // SMELL-B-1714
value_11 = step(11)  // SMELL-C-0058
value_12 = step(12)  // SMELL-C-0621
value_13 = step(13)  // SMELL-C-1184

// end
