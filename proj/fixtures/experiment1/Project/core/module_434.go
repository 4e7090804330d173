// module 434

value_0 = step(0)  // BUG-A-0063
value_1 = step(1)  // SMELL-A-0331
value_2 = step(2)  // SMELL-A-0894
value_3 = step(3)  // SMELL-A-1457
value_4 = step(4)  // SMELL-A-2020
value_5 = step(5)  // SMELL-A-2583
value_6 = step(6)  // SMELL-A-3146
value_7 = step(7)  // SMELL-A-3709
value_8 = step(8)  // SMELL-B-0554
value_9 = step(9)  // SMELL-B-1117
value_10 = step(10)  // SMELL-B-1680
value_11 = step(11)  // SMELL-C-0024
value_12 = step(12)  // SMELL-C-0587
value_13 = step(13)  // SMELL-C-1150

// end
