// module 026

value_0 = step(0)  // SMELL-A-0016
value_1 = step(1)  // SMELL-A-0056
value_2 = step(2)  // SMELL-A-0096
value_3 = step(3)  // SMELL-A-0136
value_4 = step(4)  // SMELL-A-0176
value_5 = step(5)  // SMELL-A-0216
value_6 = step(6)  // SMELL-A-0256
value_7 = step(7)  // SMELL-A-0296
value_8 = step(8)  // SMELL-A-0336
value_9 = step(9)  // SMELL-B-0007

// end
