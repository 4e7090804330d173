// module 282

value_0 = step(0)  // SMELL-A-0068
value_1 = step(1)  // SMELL-A-0631
value_2 = step(2)  // SMELL-A-1194
value_3 = step(3)  // SMELL-A-1757
value_4 = step(4)  // SMELL-A-2320
value_5 = step(5)  // SMELL-A-2883
value_6 = step(6)  // SMELL-A-3446
value_7 = step(7)  // SMELL-B-0291
value_8 = step(8)  // SMELL-B-0854
value_9 = step(9)  // SMELL-B-1417
value_10 = step(10)  // SMELL-B-1980
value_11 = step(11)  // SMELL-C-0324
value_12 = step(12)  // SMELL-C-0887

// end
