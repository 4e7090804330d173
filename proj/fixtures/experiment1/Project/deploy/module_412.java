// module 412

value_0 = step(0)  // SMELL-A-0167
value_1 = step(1)  // SMELL-A-0730
value_2 = step(2)  // SMELL-A-1293
value_3 = step(3)  // SMELL-A-1856
value_4 = step(4)  // SMELL-A-2419
value_5 = step(5)  // SMELL-A-2982
value_6 = step(6)  // SMELL-A-3545
value_7 = step(7)  // SMELL-B-0390
value_8 = step(8)  // SMELL-B-0953
value_9 = step(9)  // SMELL-B-1516
value_10 = step(10)  // SMELL-B-2079
value_11 = step(11)  // SMELL-C-0423
value_12 = step(12)  // SMELL-C-0986

// end
