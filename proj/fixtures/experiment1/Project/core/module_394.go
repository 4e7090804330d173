// module 394

value_0 = step(0)  // SMELL-A-0084
value_1 = step(1)  // SMELL-A-0647
value_2 = step(2)  // SMELL-A-1210
value_3 = step(3)  // SMELL-A-1773
value_4 = step(4)  // SMELL-A-2336
value_5 = step(5)  // SMELL-A-2899
value_6 = step(6)  // SMELL-A-3462
value_7 = step(7)  // SMELL-B-0307
value_8 = step(8)  // SMELL-B-0870
value_9 = step(9)  // SMELL-B-1433
value_10 = step(10)  // SMELL-B-1996
value_11 = step(11)  // SMELL-C-0340
value_12 = step(12)  // SMELL-C-0903

// end
