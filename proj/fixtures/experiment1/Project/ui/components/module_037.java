// module 037

value_0 = step(0)  // SMELL-A-0033
value_1 = step(1)  // SMELL-A-0596
value_2 = step(2)  // SMELL-A-1159
value_3 = step(3)  // SMELL-A-1722
value_4 = step(4)  // SMELL-A-2285
value_5 = step(5)  // SMELL-A-2848
value_6 = step(6)  // SMELL-A-3411
value_7 = step(7)  // SMELL-B-0256
value_8 = step(8)  // SMELL-B-0819
value_9 = step(9)  // SMELL-B-1382
value_10 = step(10)  // SMELL-B-1945
value_11 = step(11)  // SMELL-C-0289
value_12 = step(12)  // SMELL-C-0852

// end
