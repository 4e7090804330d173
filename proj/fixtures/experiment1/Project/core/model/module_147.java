// module 147

value_0 = step(0)  // BUG-A-0022
value_1 = step(1)  // SMELL-A-0290
value_2 = step(2)  // SMELL-A-0853
value_3 = step(3)  // SMELL-A-1416
value_4 = step(4)  // SMELL-A-1979
value_5 = step(5)  // SMELL-A-2542
value_6 = step(6)  // SMELL-A-3105
value_7 = step(7)  // SMELL-A-3668
value_8 = step(8)  // SMELL-B-0513
value_9 = step(9)  // SMELL-B-1076
value_10 = step(10)  // SMELL-B-1639
value_11 = step(11)  // SMELL-B-2202
value_12 = step(12)  // SMELL-C-0546
value_13 = step(13)  // SMELL-C-1109

// end
