// module 022

value_0 = step(0)  // BUG-B-0048
value_1 = step(1)  // SMELL-A-0433
value_2 = step(2)  // SMELL-A-0996
value_3 = step(3)  // SMELL-A-1559
value_4 = step(4)  // SMELL-A-2122
value_5 = step(5)  // SMELL-A-2685
value_6 = step(6)  // SMELL-A-3248
value_7 = step(7)  // SMELL-B-0093
value_8 = step(8)  // SMELL-B-0656
value_9 = step(9)  // SMELL-B-1219
value_10 = step(10)  // SMELL-B-1782
value_11 = step(11)  // SMELL-C-0126
value_12 = step(12)  // SMELL-C-0689
value_13 = step(13)  // SMELL-C-1252

// end
