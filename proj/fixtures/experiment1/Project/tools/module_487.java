// module 487

value_0 = step(0)  // BUG-B-0034
value_1 = step(1)  // SMELL-A-0419
value_2 = step(2)  // SMELL-A-0982
value_3 = step(3)  // SMELL-A-1545
value_4 = step(4)  // SMELL-A-2108
value_5 = step(5)  // SMELL-A-2671
value_6 = step(6)  // SMELL-A-3234
value_7 = step(7)  // SMELL-B-0079
value_8 = step(8)  // SMELL-B-0642
value_9 = step(9)  // SMELL-B-1205
value_10 = step(10)  // SMELL-B-1768
value_11 = step(11)  // SMELL-C-0112
value_12 = step(12)  // SMELL-C-0675
value_13 = step(13)  // SMELL-C-1238

// end
