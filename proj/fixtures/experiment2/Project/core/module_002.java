// module 002

value_0 = step(0)  // BUG-A-0007
value_1 = step(1)  // SMELL-A-0024
value_2 = step(2)  // SMELL-A-0064
value_3 = step(3)  // SMELL-A-0104
value_4 = step(4)  // SMELL-A-0144
value_5 = step(5)  // SMELL-A-0184
value_6 = step(6)  // SMELL-A-0224
value_7 = step(7)  // SMELL-A-0264
value_8 = step(8)  // SMELL-A-0304
value_9 = step(9)  // SMELL-A-0344
value_10 = step(10)  // SMELL-B-0015

// end
