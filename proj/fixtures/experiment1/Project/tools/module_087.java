// module 087

value_0 = step(0)  // SMELL-A-0201
value_1 = step(1)  // SMELL-A-0764
value_2 = step(2)  // SMELL-A-1327
value_3 = step(3)  // SMELL-A-1890
value_4 = step(4)  // SMELL-A-2453
value_5 = step(5)  // SMELL-A-3016
value_6 = step(6)  // SMELL-A-3579
value_7 = step(7)  // SMELL-B-0424
value_8 = step(8)  // SMELL-B-0987
value_9 = step(9)  // SMELL-B-1550
value_10 = step(10)  // SMELL-B-2113
value_11 = step(11)  // SMELL-C-0457
value_12 = step(12)  // SMELL-C-1020

// end
