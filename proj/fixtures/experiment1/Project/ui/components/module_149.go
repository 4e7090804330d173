// module 149

value_0 = step(0)  // SMELL-A-0049
value_1 = step(1)  // SMELL-A-0612
value_2 = step(2)  // SMELL-A-1175
value_3 = step(3)  // SMELL-A-1738
value_4 = step(4)  // SMELL-A-2301
value_5 = step(5)  // SMELL-A-2864
value_6 = step(6)  // SMELL-A-3427
value_7 = step(7)  // SMELL-B-0272
value_8 = step(8)  // SMELL-B-0835
value_9 = step(9)  // SMELL-B-1398
value_10 = step(10)  // SMELL-B-1961
value_11 = step(11)  // SMELL-C-0305
value_12 = step(12)  // SMELL-C-0868

// end
