// module 042

value_0 = step(0)  // BUG-A-0007
value_1 = step(1)  // SMELL-A-0275
value_2 = step(2)  // SMELL-A-0838
value_3 = step(3)  // SMELL-A-1401
value_4 = step(4)  // SMELL-A-1964
value_5 = step(5)  // SMELL-A-2527
value_6 = step(6)  // SMELL-A-3090
value_7 = step(7)  // SMELL-A-3653
value_8 = step(8)  // SMELL-B-0498
value_9 = step(9)  // SMELL-B-1061
value_10 = step(10)  // SMELL-B-1624
value_11 = step(11)  // SMELL-B-2187
value_12 = step(12)  // SMELL-C-0531
value_13 = step(13)  // SMELL-C-1094

// end
