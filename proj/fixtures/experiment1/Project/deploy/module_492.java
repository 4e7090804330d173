// module 492

value_0 = step(0)  // SMELL-A-0098
value_1 = step(1)  // SMELL-A-0661
value_2 = step(2)  // SMELL-A-1224
value_3 = step(3)  // SMELL-A-1787
value_4 = step(4)  // SMELL-A-2350
value_5 = step(5)  // SMELL-A-2913
value_6 = step(6)  // SMELL-A-3476
value_7 = step(7)  // SMELL-B-0321
value_8 = step(8)  // SMELL-B-0884
value_9 = step(9)  // SMELL-B-1447
value_10 = step(10)  // SMELL-B-2010
value_11 = step(11)  // SMELL-C-0354
value_12 = step(12)  // SMELL-C-0917

// end
