// module 199

value_0 = step(0)  // SMELL-A-0217
value_1 = step(1)  // SMELL-A-0780
value_2 = step(2)  // SMELL-A-1343
value_3 = step(3)  // SMELL-A-1906
value_4 = step(4)  // SMELL-A-2469
value_5 = step(5)  // SMELL-A-3032
value_6 = step(6)  // SMELL-A-3595
value_7 = step(7)  // SMELL-B-0440
value_8 = step(8)  // SMELL-B-1003
value_9 = step(9)  // SMELL-B-1566
value_10 = step(10)  // SMELL-B-2129
value_11 = step(11)  // SMELL-C-0473
value_12 = step(12)  // SMELL-C-1036

// end
