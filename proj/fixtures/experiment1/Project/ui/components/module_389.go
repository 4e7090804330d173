// module 389

value_0 = step(0)  // BUG-B-0020
value_1 = step(1)  // SMELL-A-0405
value_2 = step(2)  // SMELL-A-0968
value_3 = step(3)  // SMELL-A-1531
value_4 = step(4)  // SMELL-A-2094
value_5 = step(5)  // SMELL-A-2657
value_6 = step(6)  // SMELL-A-3220
value_7 = step(7)  // SMELL-B-0065
value_8 = step(8)  // SMELL-B-0628
value_9 = step(9)  // SMELL-B-1191
value_10 = step(10)  // SMELL-B-1754
value_11 = step(11)  // SMELL-C-0098
value_12 = step(12)  // SMELL-C-0661
value_13 = step(13)  // SMELL-C-1224

// end
