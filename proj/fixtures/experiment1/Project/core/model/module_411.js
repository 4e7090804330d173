// module 411

value_0 = step(0)  // SMELL-A-0006
value_1 = step(1)  // SMELL-A-0569
value_2 = step(2)  // SMELL-A-1132
value_3 = step(3)  // SMELL-A-1695
value_4 = step(4)  // SMELL-A-2258
value_5 = step(5)  // SMELL-A-2821
value_6 = step(6)  // SMELL-A-3384
value_7 = step(7)  // SMELL-B-0229
value_8 = step(8)  // SMELL-B-0792
value_9 = step(9)  // SMELL-B-1355
value_10 = step(10)  // SMELL-B-1918
value_11 = step(11)  // SMELL-C-0262
value_12 = step(12)  // SMELL-C-0825

// end
