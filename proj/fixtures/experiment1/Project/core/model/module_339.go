// module 339

value_0 = step(0)  // SMELL-A-0237
value_1 = step(1)  // SMELL-A-0800
value_2 = step(2)  // SMELL-A-1363
value_3 = step(3)  // SMELL-A-1926
value_4 = step(4)  // SMELL-A-2489
value_5 = step(5)  // SMELL-A-3052
value_6 = step(6)  // SMELL-A-3615
value_7 = step(7)  // SMELL-B-0460
value_8 = step(8)  // SMELL-B-1023
value_9 = step(9)  // SMELL-B-1586
value_10 = step(10)  // SMELL-B-2149
value_11 = step(11)  // SMELL-C-0493
value_12 = step(12)  // SMELL-C-1056

// end
