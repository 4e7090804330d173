// module 296

value_0 = step(0)  // SMELL-A-0070
value_1 = step(1)  // SMELL-A-0633
value_2 = step(2)  // SMELL-A-1196
value_3 = step(3)  // SMELL-A-1759
value_4 = step(4)  // SMELL-A-2322
value_5 = step(5)  // SMELL-A-2885
value_6 = step(6)  // SMELL-A-3448
value_7 = step(7)  // SMELL-B-0293
value_8 = step(8)  // SMELL-B-0856
value_9 = step(9)  // SMELL-B-1419
value_10 = step(10)  // SMELL-B-1982
value_11 = step(11)  // SMELL-C-0326
value_12 = step(12)  // SMELL-C-0889

// end
