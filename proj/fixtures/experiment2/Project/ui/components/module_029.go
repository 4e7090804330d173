// module 029

value_0 = step(0)  // SMELL-A-0005
value_1 = step(1)  // SMELL-A-0045
value_2 = step(2)  // SMELL-A-0085
value_3 = step(3)  // SMELL-A-0125
value_4 = step(4)  // SMELL-A-0165
value_5 = step(5)  // SMELL-A-0205
value_6 = step(6)  // SMELL-A-0245
value_7 = step(7)  // SMELL-A-0285
value_8 = step(8)  // SMELL-A-0325
value_9 = step(9)  // SMELL-A-0365

// end
