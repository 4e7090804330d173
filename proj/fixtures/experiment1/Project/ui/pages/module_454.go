// module 454

value_0 = step(0)  // SMELL-A-0173
value_1 = step(1)  // SMELL-A-0736
value_2 = step(2)  // SMELL-A-1299
value_3 = step(3)  // SMELL-A-1862
value_4 = step(4)  // SMELL-A-2425
value_5 = step(5)  // SMELL-A-2988
value_6 = step(6)  // SMELL-A-3551
value_7 = step(7)  // SMELL-B-0396
value_8 = step(8)  // SMELL-B-0959
value_9 = step(9)  // SMELL-B-1522
value_10 = step(10)  // SMELL-B-2085
value_11 = step(11)  // SMELL-C-0429
value_12 = step(12)  // SMELL-C-0992

// end
