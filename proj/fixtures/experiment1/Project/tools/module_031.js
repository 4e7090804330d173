// module 031

value_0 = step(0)  // SMELL-A-0193
value_1 = step(1)  // SMELL-A-0756
value_2 = step(2)  // SMELL-A-1319
value_3 = step(3)  // SMELL-A-1882
value_4 = step(4)  // SMELL-A-2445
value_5 = step(5)  // SMELL-A-3008
value_6 = step(6)  // SMELL-A-3571
value_7 = step(7)  // SMELL-B-0416
value_8 = step(8)  // SMELL-B-0979
value_9 = step(9)  // SMELL-B-1542
value_10 = step(10)  // SMELL-B-2105
value_11 = step(11)  // SMELL-C-0449
value_12 = step(12)  // SMELL-C-1012

// end
