// module 022

value_0 = step(0)  // SMELL-A-0004
value_1 = step(1)  // SMELL-A-0044
value_2 = step(2)  // SMELL-A-0084
value_3 = step(3)  // SMELL-A-0124
value_4 = step(4)  // SMELL-A-0164
value_5 = step(5)  // SMELL-A-0204
value_6 = step(6)  // SMELL-A-0244
value_7 = step(7)  // SMELL-A-0284
value_8 = step(8)  // SMELL-A-0324
value_9 = step(9)  // SMELL-A-0364

// end
