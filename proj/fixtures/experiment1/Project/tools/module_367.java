// module 367

value_0 = step(0)  // SMELL-A-0241
value_1 = step(1)  // SMELL-A-0804
value_2 = step(2)  // SMELL-A-1367
value_3 = step(3)  // SMELL-A-1930
value_4 = step(4)  // SMELL-A-2493
value_5 = step(5)  // SMELL-A-3056
value_6 = step(6)  // SMELL-A-3619
value_7 = step(7)  // SMELL-B-0464
value_8 = step(8)  // SMELL-B-1027
value_9 = step(9)  // SMELL-B-1590
value_10 = step(10)  // SMELL-B-2153
value_11 = step(11)  // SMELL-C-0497
value_12 = step(12)  // SMELL-C-1060

// end
