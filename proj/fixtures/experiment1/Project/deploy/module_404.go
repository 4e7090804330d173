// module 404

value_0 = step(0)  // SMELL-A-0005
value_1 = step(1)  // SMELL-A-0568
value_2 = step(2)  // SMELL-A-1131
value_3 = step(3)  // SMELL-A-1694
value_4 = step(4)  // SMELL-A-2257
value_5 = step(5)  // SMELL-A-2820
value_6 = step(6)  // SMELL-A-3383
value_7 = step(7)  // SMELL-B-0228
value_8 = step(8)  // SMELL-B-0791
value_9 = step(9)  // SMELL-B-1354
value_10 = step(10)  // SMELL-B-1917
value_11 = step(11)  // SMELL-C-0261
value_12 = step(12)  // SMELL-C-0824

// end
