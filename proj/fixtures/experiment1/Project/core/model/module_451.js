// module 451

value_0 = step(0)  // SMELL-A-0253
value_1 = step(1)  // SMELL-A-0816
value_2 = step(2)  // SMELL-A-1379
value_3 = step(3)  // SMELL-A-1942
value_4 = step(4)  // SMELL-A-2505
value_5 = step(5)  // SMELL-A-3068
value_6 = step(6)  // SMELL-A-3631
value_7 = step(7)  // SMELL-B-0476
value_8 = step(8)  // SMELL-B-1039
value_9 = step(9)  // SMELL-B-1602
value_10 = step(10)  // SMELL-B-2165
value_11 = step(11)  // SMELL-C-0509
value_12 = step(12)  // SMELL-C-1072

// end
