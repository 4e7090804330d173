// module 481

value_0 = step(0)  // SMELL-A-0016
value_1 = step(1)  // SMELL-A-0579
value_2 = step(2)  // SMELL-A-1142
value_3 = step(3)  // SMELL-A-1705
value_4 = step(4)  // SMELL-A-2268
value_5 = step(5)  // SMELL-A-2831
value_6 = step(6)  // SMELL-A-3394
value_7 = step(7)  // SMELL-B-0239
value_8 = step(8)  // SMELL-B-0802
value_9 = step(9)  // SMELL-B-1365
value_10 = step(10)  // SMELL-B-1928
value_11 = step(11)  // SMELL-C-0272
value_12 = step(12)  // SMELL-C-0835

// end
