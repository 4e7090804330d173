// module 469

value_0 = step(0)  // BUG-A-0068
value_1 = step(1)  // SMELL-A-0336
value_2 = step(2)  // SMELL-A-0899
value_3 = step(3)  // SMELL-A-1462
value_4 = step(4)  // SMELL-A-2025
value_5 = step(5)  // SMELL-A-2588
value_6 = step(6)  // SMELL-A-3151
value_7 = step(7)  // SMELL-A-3714
value_8 = step(8)  // SMELL-B-0559
value_9 = step(9)  // SMELL-B-1122
value_10 = step(10)  // SMELL-B-1685
value_11 = step(11)  // SMELL-C-0029
value_12 = step(12)  // SMELL-C-0592
value_13 = step(13)  // SMELL-C-1155

// end
