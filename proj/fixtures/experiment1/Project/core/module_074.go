// module 074

value_0 = step(0)  // BUG-A-0092
value_1 = step(1)  // SMELL-A-0360
value_2 = step(2)  // SMELL-A-0923
value_3 = step(3)  // SMELL-A-1486
value_4 = step(4)  // SMELL-A-2049
value_5 = step(5)  // SMELL-A-2612
value_6 = step(6)  // SMELL-A-3175
value_7 = step(7)  // SMELL-B-0020
value_8 = step(8)  // SMELL-B-0583
value_9 = step(9)  // SMELL-B-1146
value_10 = step(10)  // SMELL-B-1709
value_11 = step(11)  // SMELL-C-0053
value_12 = step(12)  // SMELL-C-0616
value_13 = step(13)  // SMELL-C-1179

// end
