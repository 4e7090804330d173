// module 401

value_0 = step(0)  // SMELL-A-0085
value_1 = step(1)  // SMELL-A-0648
value_2 = step(2)  // SMELL-A-1211
value_3 = step(3)  // SMELL-A-1774
value_4 = step(4)  // SMELL-A-2337
value_5 = step(5)  // SMELL-A-2900
value_6 = step(6)  // SMELL-A-3463
value_7 = step(7)  // SMELL-B-0308
value_8 = step(8)  // SMELL-B-0871
value_9 = step(9)  // SMELL-B-1434
value_10 = step(10)  // SMELL-B-1997
value_11 = step(11)  // SMELL-C-0341
value_12 = step(12)  // SMELL-C-0904

// end
