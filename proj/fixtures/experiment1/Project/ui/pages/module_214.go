// module 214

value_0 = step(0)  // BUG-A-0112
value_1 = step(1)  // SMELL-A-0380
value_2 = step(2)  // SMELL-A-0943
value_3 = step(3)  // SMELL-A-1506
value_4 = step(4)  // SMELL-A-2069
value_5 = step(5)  // SMELL-A-2632
value_6 = step(6)  // SMELL-A-3195
value_7 = step(7)  // SMELL-B-0040
value_8 = step(8)  // SMELL-B-0603
value_9 = step(9)  // SMELL-B-1166
value_10 = step(10)  // SMELL-B-1729
value_11 = step(11)  // SMELL-C-0073
value_12 = step(12)  // SMELL-C-0636
value_13 = step(13)  // SMELL-C-1199

// end
