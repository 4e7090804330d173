// module 144

value_0 = step(0)  // BUG-A-0102
value_1 = step(1)  // SMELL-A-0370
value_2 = step(2)  // SMELL-A-0933
value_3 = step(3)  // SMELL-A-1496
value_4 = step(4)  // SMELL-A-2059
value_5 = step(5)  // SMELL-A-2622
value_6 = step(6)  // SMELL-A-3185
value_7 = step(7)  // SMELL-B-0030
value_8 = step(8)  // SMELL-B-0593
value_9 = step(9)  // SMELL-B-1156
value_10 = step(10)  // SMELL-B-1719
value_11 = step(11)  // SMELL-C-0063
value_12 = step(12)  // SMELL-C-0626
value_13 = step(13)  // SMELL-C-1189

// end
