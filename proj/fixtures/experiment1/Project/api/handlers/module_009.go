// module 009

value_0 = step(0)  // SMELL-A-0029
value_1 = step(1)  // SMELL-A-0592
value_2 = step(2)  // SMELL-A-1155
value_3 = step(3)  // SMELL-A-1718
value_4 = step(4)  // SMELL-A-2281
value_5 = step(5)  // SMELL-A-2844
value_6 = step(6)  // SMELL-A-3407
value_7 = step(7)  // SMELL-B-0252
value_8 = step(8)  // SMELL-B-0815
value_9 = step(9)  // SMELL-B-1378
value_10 = step(10)  // SMELL-B-1941
value_11 = step(11)  // SMELL-C-0285
value_12 = step(12)  // SMELL-C-0848

// end
