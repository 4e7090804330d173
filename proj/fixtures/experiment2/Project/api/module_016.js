// module 016

value_0 = step(0)  // BUG-A-0009
value_1 = step(1)  // SMELL-A-0026
value_2 = step(2)  // SMELL-A-0066
value_3 = step(3)  // SMELL-A-0106
value_4 = step(4)  // SMELL-A-0146
value_5 = step(5)  // SMELL-A-0186
value_6 = step(6)  // SMELL-A-0226
value_7 = step(7)  // SMELL-A-0266
value_8 = step(8)  // SMELL-A-0306
value_9 = step(9)  // SMELL-A-0346
value_10 = step(10)  // SMELL-B-0017

// end
