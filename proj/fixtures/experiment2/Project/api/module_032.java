// module 032

value_0 = step(0)  // BUG-A-0017
value_1 = step(1)  // SMELL-A-0034
value_2 = step(2)  // SMELL-A-0074
value_3 = step(3)  // SMELL-A-0114
value_4 = step(4)  // SMELL-A-0154
value_5 = step(5)  // SMELL-A-0194
value_6 = step(6)  // SMELL-A-0234
value_7 = step(7)  // SMELL-A-0274
value_8 = step(8)  // SMELL-A-0314
value_9 = step(9)  // SMELL-A-0354
value_10 = step(10)  // SMELL-B-0025

// end
