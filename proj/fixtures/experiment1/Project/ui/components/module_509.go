// module 509

value_0 = step(0)  // SMELL-A-0020
value_1 = step(1)  // SMELL-A-0583
value_2 = step(2)  // SMELL-A-1146
value_3 = step(3)  // SMELL-A-1709
value_4 = step(4)  // SMELL-A-2272
value_5 = step(5)  // SMELL-A-2835
value_6 = step(6)  // SMELL-A-3398
value_7 = step(7)  // SMELL-B-0243
value_8 = step(8)  // SMELL-B-0806
value_9 = step(9)  // SMELL-B-1369
value_10 = step(10)  // SMELL-B-1932
value_11 = step(11)  // SMELL-C-0276
value_12 = step(12)  // SMELL-C-0839

// end
