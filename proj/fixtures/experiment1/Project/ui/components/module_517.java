// module 517

value_0 = step(0)  // SMELL-A-0182
value_1 = step(1)  // SMELL-A-0745
value_2 = step(2)  // SMELL-A-1308
value_3 = step(3)  // SMELL-A-1871
value_4 = step(4)  // SMELL-A-2434
value_5 = step(5)  // SMELL-A-2997
value_6 = step(6)  // SMELL-A-3560
value_7 = step(7)  // SMELL-B-0405
value_8 = step(8)  // SMELL-B-0968
value_9 = step(9)  // SMELL-B-1531
value_10 = step(10)  // SMELL-B-2094
value_11 = step(11)  // SMELL-C-0438
value_12 = step(12)  // SMELL-C-1001

// end
