// module 051

value_0 = step(0)  // SMELL-A-0035
value_1 = step(1)  // SMELL-A-0598
value_2 = step(2)  // SMELL-A-1161
value_3 = step(3)  // SMELL-A-1724
value_4 = step(4)  // SMELL-A-2287
value_5 = step(5)  // SMELL-A-2850
value_6 = step(6)  // SMELL-A-3413
value_7 = step(7)  // SMELL-B-0258
value_8 = step(8)  // SMELL-B-0821
value_9 = step(9)  // SMELL-B-1384
value_10 = step(10)  // SMELL-B-1947
value_11 = step(11)  // SMELL-C-0291
value_12 = step(12)  // SMELL-C-0854

// end
