// module 562

value_0 = step(0)  // SMELL-A-0108
value_1 = step(1)  // SMELL-A-0671
value_2 = step(2)  // SMELL-A-1234
value_3 = step(3)  // SMELL-A-1797
value_4 = step(4)  // SMELL-A-2360
value_5 = step(5)  // SMELL-A-2923
value_6 = step(6)  // SMELL-A-3486
value_7 = step(7)  // SMELL-B-0331
value_8 = step(8)  // SMELL-B-0894
value_9 = step(9)  // SMELL-B-1457
value_10 = step(10)  // SMELL-B-2020
value_11 = step(11)  // SMELL-C-0364
value_12 = step(12)  // SMELL-C-0927

// end
