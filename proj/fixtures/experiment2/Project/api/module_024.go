// module 024

value_0 = step(0)  // SMELL-A-0010
value_1 = step(1)  // SMELL-A-0050
value_2 = step(2)  // SMELL-A-0090
value_3 = step(3)  // SMELL-A-0130
value_4 = step(4)  // SMELL-A-0170
value_5 = step(5)  // SMELL-A-0210
value_6 = step(6)  // SMELL-A-0250
value_7 = step(7)  // SMELL-A-0290
value_8 = step(8)  // SMELL-A-0330
value_9 = step(9)  // SMELL-B-0001

// end
