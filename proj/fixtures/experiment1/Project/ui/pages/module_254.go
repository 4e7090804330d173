// module 254

value_0 = step(0)  // SMELL-A-0064
value_1 = step(1)  // SMELL-A-0627
value_2 = step(2)  // SMELL-A-1190
value_3 = step(3)  // SMELL-A-1753
value_4 = step(4)  // SMELL-A-2316
value_5 = step(5)  // SMELL-A-2879
value_6 = step(6)  // SMELL-A-3442
value_7 = step(7)  // SMELL-B-0287
value_8 = step(8)  // SMELL-B-0850
value_9 = step(9)  // SMELL-B-1413
value_10 = step(10)  // SMELL-B-1976
value_11 = step(11)  // SMELL-C-0320
value_12 = step(12)  // SMELL-C-0883

// end
