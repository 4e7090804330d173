// module 484

value_0 = step(0)  // BUG-B-0114
value_1 = step(1)  // SMELL-A-0499
value_2 = step(2)  // SMELL-A-1062
value_3 = step(3)  // SMELL-A-1625
value_4 = step(4)  // SMELL-A-2188
value_5 = step(5)  // SMELL-A-2751
value_6 = step(6)  // SMELL-A-3314
value_7 = step(7)  // SMELL-B-0159
value_8 = step(8)  // SMELL-B-0722
value_9 = step(9)  // SMELL-B-1285
value_10 = step(10)  // SMELL-B-1848
value_11 = step(11)  // SMELL-C-0192
value_12 = step(12)  // SMELL-C-0755
value_13 = step(13)  // SMELL-C-1318

// end
