// module 226

value_0 = step(0)  // SMELL-A-0060
value_1 = step(1)  // SMELL-A-0623
value_2 = step(2)  // SMELL-A-1186
value_3 = step(3)  // SMELL-A-1749
value_4 = step(4)  // SMELL-A-2312
value_5 = step(5)  // SMELL-A-2875
value_6 = step(6)  // SMELL-A-3438
value_7 = step(7)  // SMELL-B-0283
value_8 = step(8)  // SMELL-B-0846
value_9 = step(9)  // SMELL-B-1409
value_10 = step(10)  // SMELL-B-1972
value_11 = step(11)  // SMELL-C-0316
value_12 = step(12)  // SMELL-C-0879

// end
