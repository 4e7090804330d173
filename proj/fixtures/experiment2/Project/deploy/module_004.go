// module 004

value_0 = step(0)  // BUG-A-0013
value_1 = step(1)  // SMELL-A-0030
value_2 = step(2)  // SMELL-A-0070
value_3 = step(3)  // SMELL-A-0110
value_4 = step(4)  // SMELL-A-0150
value_5 = step(5)  // SMELL-A-0190
value_6 = step(6)  // SMELL-A-0230
value_7 = step(7)  // SMELL-A-0270
value_8 = step(8)  // SMELL-A-0310
value_9 = step(9)  // SMELL-A-0350
value_10 = step(10)  // SMELL-B-0021

// end
