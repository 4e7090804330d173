// module 196

value_0 = step(0)  // BUG-A-0029
value_1 = step(1)  // SMELL-A-0297
value_2 = step(2)  // SMELL-A-0860
value_3 = step(3)  // SMELL-A-1423
value_4 = step(4)  // SMELL-A-1986
value_5 = step(5)  // SMELL-A-2549
value_6 = step(6)  // SMELL-A-3112
value_7 = step(7)  // SMELL-A-3675
value_8 = step(8)  // SMELL-B-0520
value_9 = step(9)  // SMELL-B-1083
value_10 = step(10)  // SMELL-B-1646
value_11 = step(11)  // SMELL-B-2209
value_12 = step(12)  // SMELL-C-0553
value_13 = step(13)  // SMELL-C-1116

// end
