// module 012

value_0 = step(0)  // SMELL-A-0014
value_1 = step(1)  // SMELL-A-0054
value_2 = step(2)  // SMELL-A-0094
value_3 = step(3)  // SMELL-A-0134
value_4 = step(4)  // SMELL-A-0174
value_5 = step(5)  // SMELL-A-0214
value_6 = step(6)  // SMELL-A-0254
value_7 = step(7)  // SMELL-A-0294
value_8 = step(8)  // SMELL-A-0334
value_9 = step(9)  // SMELL-B-0005

// end
