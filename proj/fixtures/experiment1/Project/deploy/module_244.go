// module 244

value_0 = step(0)  // SMELL-A-0143
value_1 = step(1)  // SMELL-A-0706
value_2 = step(2)  // SMELL-A-1269
value_3 = step(3)  // SMELL-A-1832
value_4 = step(4)  // SMELL-A-2395
value_5 = step(5)  // SMELL-A-2958
value_6 = step(6)  // SMELL-A-3521
value_7 = step(7)  // SMELL-B-0366
value_8 = step(8)  // SMELL-B-0929
value_9 = step(9)  // SMELL-B-1492
value_10 = step(10)  // SMELL-B-2055
value_11 = step(11)  // SMELL-C-0399
value_12 = step(12)  // SMELL-C-0962

// end
