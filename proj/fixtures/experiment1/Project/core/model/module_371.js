// module 371

value_0 = step(0)  // BUG-A-0054
value_1 = step(1)  // SMELL-A-0322
value_2 = step(2)  // SMELL-A-0885
value_3 = step(3)  // SMELL-A-1448
value_4 = step(4)  // SMELL-A-2011
value_5 = step(5)  // SMELL-A-2574
value_6 = step(6)  // SMELL-A-3137
value_7 = step(7)  // SMELL-A-3700
value_8 = step(8)  // SMELL-B-0545
value_9 = step(9)  // SMELL-B-1108
value_10 = step(10)  // SMELL-B-1671
value_11 = step(11)  // SMELL-C-0015
value_12 = step(12)  // SMELL-C-0578
value_13 = step(13)  // SMELL-C-1141

// end
