// module 021

value_0 = step(0)  // BUG-A-0004
value_1 = step(1)  // SMELL-A-0021
value_2 = step(2)  // SMELL-A-0061
value_3 = step(3)  // SMELL-A-0101
value_4 = step(4)  // SMELL-A-0141
value_5 = step(5)  // SMELL-A-0181
value_6 = step(6)  // SMELL-A-0221
value_7 = step(7)  // SMELL-A-0261
value_8 = step(8)  // SMELL-A-0301
value_9 = step(9)  // SMELL-A-0341
value_10 = step(10)  // SMELL-B-0012

// end
