// module 127

value_0 = step(0)  // BUG-B-0063
value_1 = step(1)  // SMELL-A-0448
value_2 = step(2)  // SMELL-A-1011
value_3 = step(3)  // SMELL-A-1574
value_4 = step(4)  // SMELL-A-2137
value_5 = step(5)  // SMELL-A-2700
value_6 = step(6)  // SMELL-A-3263
value_7 = step(7)  // SMELL-B-0108
value_8 = step(8)  // SMELL-B-0671
value_9 = step(9)  // SMELL-B-1234
value_10 = step(10)  // SMELL-B-1797
value_11 = step(11)  // SMELL-C-0141
value_12 = step(12)  // SMELL-C-0704
value_13 = step(13)  // SMELL-C-1267

// end
