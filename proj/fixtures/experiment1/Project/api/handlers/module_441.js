// module 441

value_0 = step(0)  // BUG-A-0064
value_1 = step(1)  // SMELL-A-0332
value_2 = step(2)  // SMELL-A-0895
value_3 = step(3)  // SMELL-A-1458
value_4 = step(4)  // SMELL-A-2021
value_5 = step(5)  // SMELL-A-2584
value_6 = step(6)  // SMELL-A-3147
value_7 = step(7)  // SMELL-A-3710
value_8 = step(8)  // SMELL-B-0555
value_9 = step(9)  // SMELL-B-1118
value_10 = step(10)  // SMELL-B-1681
value_11 = step(11)  // SMELL-C-0025
value_12 = step(12)  // SMELL-C-0588
value_13 = step(13)  // SMELL-C-1151

// end
