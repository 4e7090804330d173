// module 514

value_0 = step(0)  // SMELL-A-0262
value_1 = step(1)  // SMELL-A-0825
value_2 = step(2)  // SMELL-A-1388
value_3 = step(3)  // SMELL-A-1951
value_4 = step(4)  // SMELL-A-2514
value_5 = step(5)  // SMELL-A-3077
value_6 = step(6)  // SMELL-A-3640
value_7 = step(7)  // SMELL-B-0485
value_8 = step(8)  // SMELL-B-1048
value_9 = step(9)  // SMELL-B-1611
value_10 = step(10)  // SMELL-B-2174
value_11 = step(11)  // SMELL-C-0518
value_12 = step(12)  // SMELL-C-1081

// end
