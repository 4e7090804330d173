// module 014

value_0 = step(0)  // BUG-A-0003
value_1 = step(1)  // SMELL-A-0020
value_2 = step(2)  // SMELL-A-0060
value_3 = step(3)  // SMELL-A-0100
value_4 = step(4)  // SMELL-A-0140
value_5 = step(5)  // SMELL-A-0180
value_6 = step(6)  // SMELL-A-0220
value_7 = step(7)  // SMELL-A-0260
value_8 = step(8)  // SMELL-A-0300
value_9 = step(9)  // SMELL-A-0340
value_10 = step(10)  // SMELL-B-0011

// end
