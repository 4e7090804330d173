// module 111

value_0 = step(0)  // SMELL-A-0124
value_1 = step(1)  // SMELL-A-0687
value_2 = step(2)  // SMELL-A-1250
value_3 = step(3)  // SMELL-A-1813
value_4 = step(4)  // SMELL-A-2376
value_5 = step(5)  // SMELL-A-2939
value_6 = step(6)  // SMELL-A-3502
value_7 = step(7)  // SMELL-B-0347
value_8 = step(8)  // SMELL-B-0910
value_9 = step(9)  // SMELL-B-1473
value_10 = step(10)  // SMELL-B-2036
value_11 = step(11)  // SMELL-C-0380
value_12 = step(12)  // SMELL-C-0943

// end
