// module 037

value_0 = step(0)  // BUG-A-0012
value_1 = step(1)  // SMELL-A-0029
value_2 = step(2)  // SMELL-A-0069
value_3 = step(3)  // SMELL-A-0109
value_4 = step(4)  // SMELL-A-0149
value_5 = step(5)  // SMELL-A-0189
value_6 = step(6)  // SMELL-A-0229
value_7 = step(7)  // SMELL-A-0269
value_8 = step(8)  // SMELL-A-0309
value_9 = step(9)  // SMELL-A-0349
value_10 = step(10)  // SMELL-B-0020

// end
