// module 342

value_0 = step(0)  // SMELL-A-0157
value_1 = step(1)  // SMELL-A-0720
value_2 = step(2)  // SMELL-A-1283
value_3 = step(3)  // SMELL-A-1846
value_4 = step(4)  // SMELL-A-2409
value_5 = step(5)  // SMELL-A-2972
value_6 = step(6)  // SMELL-A-3535
value_7 = step(7)  // SMELL-B-0380
value_8 = step(8)  // SMELL-B-0943
value_9 = step(9)  // SMELL-B-1506
value_10 = step(10)  // SMELL-B-2069
value_11 = step(11)  // SMELL-C-0413
value_12 = step(12)  // SMELL-C-0976

// end
