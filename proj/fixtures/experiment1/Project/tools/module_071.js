// module 071

value_0 = step(0)  // BUG-B-0055
value_1 = step(1)  // SMELL-A-0440
value_2 = step(2)  // SMELL-A-1003
value_3 = step(3)  // SMELL-A-1566
value_4 = step(4)  // SMELL-A-2129
value_5 = step(5)  // SMELL-A-2692
value_6 = step(6)  // SMELL-A-3255
value_7 = step(7)  // SMELL-B-0100
value_8 = step(8)  // SMELL-B-0663
value_9 = step(9)  // SMELL-B-1226
value_10 = step(10)  // SMELL-B-1789
value_11 = step(11)  // SMELL-C-0133
value_12 = step(12)  // SMELL-C-0696
value_13 = step(13)  // SMELL-C-1259

// end
