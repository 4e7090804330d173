// module 171

value_0 = step(0)  // SMELL-A-0213
value_1 = step(1)  // SMELL-A-0776
value_2 = step(2)  // SMELL-A-1339
value_3 = step(3)  // SMELL-A-1902
value_4 = step(4)  // SMELL-A-2465
value_5 = step(5)  // SMELL-A-3028
value_6 = step(6)  // SMELL-A-3591
value_7 = step(7)  // SMELL-B-0436
value_8 = step(8)  // SMELL-B-0999
value_9 = step(9)  // SMELL-B-1562
value_10 = step(10)  // SMELL-B-2125
value_11 = step(11)  // SMELL-C-0469
value_12 = step(12)  // SMELL-C-1032

// end
