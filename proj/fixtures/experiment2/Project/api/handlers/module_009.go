// module 009

value_0 = step(0)  // BUG-A-0008
value_1 = step(1)  // SMELL-A-0025
value_2 = step(2)  // SMELL-A-0065
value_3 = step(3)  // SMELL-A-0105
value_4 = step(4)  // SMELL-A-0145
value_5 = step(5)  // SMELL-A-0185
value_6 = step(6)  // SMELL-A-0225
value_7 = step(7)  // SMELL-A-0265
value_8 = step(8)  // SMELL-A-0305
value_9 = step(9)  // SMELL-A-0345
value_10 = step(10)  // SMELL-B-0016

// end
