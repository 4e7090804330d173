// module 014

value_0 = step(0)  // BUG-A-0003
value_1 = step(1)  // SMELL-A-0271
value_2 = step(2)  // SMELL-A-0834
value_3 = step(3)  // SMELL-A-1397
value_4 = step(4)  // SMELL-A-1960
value_5 = step(5)  // SMELL-A-2523
value_6 = step(6)  // SMELL-A-3086
value_7 = step(7)  // SMELL-A-3649
value_8 = step(8)  // SMELL-B-0494
value_9 = step(9)  // SMELL-B-1057
value_10 = step(10)  // SMELL-B-1620
value_11 = step(11)  // SMELL-B-2183
value_12 = step(12)  // SMELL-C-0527
value_13 = step(13)  // SMELL-C-1090

// end
