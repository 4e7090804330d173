// module 301

value_0 = step(0)  // BUG-A-0044
value_1 = step(1)  // SMELL-A-0312
value_2 = step(2)  // SMELL-A-0875
value_3 = step(3)  // SMELL-A-1438
value_4 = step(4)  // SMELL-A-2001
value_5 = step(5)  // SMELL-A-2564
value_6 = step(6)  // SMELL-A-3127
value_7 = step(7)  // SMELL-A-3690
value_8 = step(8)  // SMELL-B-0535
value_9 = step(9)  // SMELL-B-1098
value_10 = step(10)  // SMELL-B-1661
value_11 = step(11)  // SMELL-C-0005
value_12 = step(12)  // SMELL-C-0568
value_13 = step(13)  // SMELL-C-1131

// end
