// module 017

value_0 = step(0)  // SMELL-A-0009
value_1 = step(1)  // SMELL-A-0049
value_2 = step(2)  // SMELL-A-0089
value_3 = step(3)  // SMELL-A-0129
value_4 = step(4)  // SMELL-A-0169
value_5 = step(5)  // SMELL-A-0209
value_6 = step(6)  // SMELL-A-0249
value_7 = step(7)  // SMELL-A-0289
value_8 = step(8)  // SMELL-A-0329
value_9 = step(9)  // SMELL-A-0369

// end
