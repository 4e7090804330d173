// module 114

value_0 = step(0)  // SMELL-A-0044
value_1 = step(1)  // SMELL-A-0607
value_2 = step(2)  // SMELL-A-1170
value_3 = step(3)  // SMELL-A-1733
value_4 = step(4)  // SMELL-A-2296
value_5 = step(5)  // SMELL-A-2859
value_6 = step(6)  // SMELL-A-3422
value_7 = step(7)  // SMELL-B-0267
value_8 = step(8)  // SMELL-B-0830
value_9 = step(9)  // SMELL-B-1393
value_10 = step(10)  // SMELL-B-1956
value_11 = step(11)  // SMELL-C-0300
value_12 = step(12)  // SMELL-C-0863

// end
