// module 442

value_0 = step(0)  // BUG-B-0108
value_1 = step(1)  // SMELL-A-0493
value_2 = step(2)  // SMELL-A-1056
value_3 = step(3)  // SMELL-A-1619
value_4 = step(4)  // SMELL-A-2182
value_5 = step(5)  // SMELL-A-2745
value_6 = step(6)  // SMELL-A-3308
value_7 = step(7)  // SMELL-B-0153
value_8 = step(8)  // SMELL-B-0716
value_9 = step(9)  // SMELL-B-1279
value_10 = step(10)  // SMELL-B-1842
value_11 = step(11)  // SMELL-C-0186
value_12 = step(12)  // SMELL-C-0749
value_13 = step(13)  // SMELL-C-1312

// end
