// module 019

value_0 = step(0)  // SMELL-A-0015
value_1 = step(1)  // SMELL-A-0055
value_2 = step(2)  // SMELL-A-0095
value_3 = step(3)  // SMELL-A-0135
value_4 = step(4)  // SMELL-A-0175
value_5 = step(5)  // SMELL-A-0215
value_6 = step(6)  // SMELL-A-0255
value_7 = step(7)  // SMELL-A-0295
value_8 = step(8)  // SMELL-A-0335
value_9 = step(9)  // SMELL-B-0006

// end
