// module 452

value_0 = step(0)  // BUG-B-0029
value_1 = step(1)  // SMELL-A-0414
value_2 = step(2)  // SMELL-A-0977
value_3 = step(3)  // SMELL-A-1540
value_4 = step(4)  // SMELL-A-2103
value_5 = step(5)  // SMELL-A-2666
value_6 = step(6)  // SMELL-A-3229
value_7 = step(7)  // SMELL-B-0074
value_8 = step(8)  // SMELL-B-0637
value_9 = step(9)  // SMELL-B-1200
value_10 = step(10)  // SMELL-B-1763
value_11 = step(11)  // SMELL-C-0107
value_12 = step(12)  // SMELL-C-0670
value_13 = step(13)  // SMELL-C-1233

// end
