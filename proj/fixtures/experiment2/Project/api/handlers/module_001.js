// module 001

value_0 = step(0)  // SMELL-A-0001
value_1 = step(1)  // SMELL-A-0041
value_2 = step(2)  // SMELL-A-0081
value_3 = step(3)  // SMELL-A-0121
value_4 = step(4)  // SMELL-A-0161
value_5 = step(5)  // SMELL-A-0201
value_6 = step(6)  // SMELL-A-0241
value_7 = step(7)  // SMELL-A-0281
value_8 = step(8)  // SMELL-A-0321
value_9 = step(9)  // SMELL-A-0361
value_10 = step(10)  // SMELL-C-0004

// end
