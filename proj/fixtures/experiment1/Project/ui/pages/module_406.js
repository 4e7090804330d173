// module 406

value_0 = step(0)  // BUG-A-0059
value_1 = step(1)  // SMELL-A-0327
value_2 = step(2)  // SMELL-A-0890
value_3 = step(3)  // SMELL-A-1453
value_4 = step(4)  // SMELL-A-2016
value_5 = step(5)  // SMELL-A-2579
value_6 = step(6)  // SMELL-A-3142
value_7 = step(7)  // SMELL-A-3705
value_8 = step(8)  // SMELL-B-0550
value_9 = step(9)  // SMELL-B-1113
value_10 = step(10)  // SMELL-B-1676
value_11 = step(11)  // SMELL-C-0020
value_12 = step(12)  // SMELL-C-0583
value_13 = step(13)  // SMELL-C-1146

// end
