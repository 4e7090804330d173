// module 034

value_0 = step(0)  // VULN-A-0002
value_1 = step(1)  // SMELL-A-0040
value_2 = step(2)  // SMELL-A-0080
value_3 = step(3)  // SMELL-A-0120
value_4 = step(4)  // SMELL-A-0160
value_5 = step(5)  // SMELL-A-0200
value_6 = step(6)  // SMELL-A-0240
value_7 = step(7)  // SMELL-A-0280
value_8 = step(8)  // SMELL-A-0320
value_9 = step(9)  // SMELL-A-0360
value_10 = step(10)  // SMELL-C-0003

// end
