// module 281

value_0 = step(0)  // BUG-B-0085
value_1 = step(1)  // SMELL-A-0470
value_2 = step(2)  // SMELL-A-1033
value_3 = step(3)  // SMELL-A-1596
value_4 = step(4)  // SMELL-A-2159
value_5 = step(5)  // SMELL-A-2722
value_6 = step(6)  // SMELL-A-3285
value_7 = step(7)  // SMELL-B-0130
value_8 = step(8)  // SMELL-B-0693
value_9 = step(9)  // SMELL-B-1256
value_10 = step(10)  // SMELL-B-1819
value_11 = step(11)  // SMELL-C-0163
value_12 = step(12)  // SMELL-C-0726
value_13 = step(13)  // SMELL-C-1289

// end
