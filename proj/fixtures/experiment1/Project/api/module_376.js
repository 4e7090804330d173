// module 376

value_0 = step(0)  // SMELL-A-0001
value_1 = step(1)  // SMELL-A-0564
value_2 = step(2)  // SMELL-A-1127
value_3 = step(3)  // SMELL-A-1690
value_4 = step(4)  // SMELL-A-2253
value_5 = step(5)  // SMELL-A-2816
value_6 = step(6)  // SMELL-A-3379
value_7 = step(7)  // SMELL-B-0224
value_8 = step(8)  // SMELL-B-0787
value_9 = step(9)  // SMELL-B-1350
value_10 = step(10)  // SMELL-B-1913
value_11 = step(11)  // SMELL-C-0257
value_12 = step(12)  // SMELL-C-0820

// end
