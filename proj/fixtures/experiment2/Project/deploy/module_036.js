// module 036

value_0 = step(0)  // SMELL-A-0006
value_1 = step(1)  // SMELL-A-0046
value_2 = step(2)  // SMELL-A-0086
value_3 = step(3)  // SMELL-A-0126
value_4 = step(4)  // SMELL-A-0166
value_5 = step(5)  // SMELL-A-0206
value_6 = step(6)  // SMELL-A-0246
value_7 = step(7)  // SMELL-A-0286
value_8 = step(8)  // SMELL-A-0326
value_9 = step(9)  // SMELL-A-0366

// end
