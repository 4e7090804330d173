// module 039

value_0 = step(0)  // BUG-A-0018
value_1 = step(1)  // SMELL-A-0035
value_2 = step(2)  // SMELL-A-0075
value_3 = step(3)  // SMELL-A-0115
value_4 = step(4)  // SMELL-A-0155
value_5 = step(5)  // SMELL-A-0195
value_6 = step(6)  // SMELL-A-0235
value_7 = step(7)  // SMELL-A-0275
value_8 = step(8)  // SMELL-A-0315
value_9 = step(9)  // SMELL-A-0355
value_10 = step(10)  // SMELL-B-0026

// end
