// module 006

value_0 = step(0)  // BUG-A-0019
value_1 = step(1)  // SMELL-A-0036
value_2 = step(2)  // SMELL-A-0076
value_3 = step(3)  // SMELL-A-0116
value_4 = step(4)  // SMELL-A-0156
value_5 = step(5)  // SMELL-A-0196
value_6 = step(6)  // SMELL-A-0236
value_7 = step(7)  // SMELL-A-0276
value_8 = step(8)  // SMELL-A-0316
value_9 = step(9)  // SMELL-A-0356
value_10 = step(10)  // SMELL-B-0027

// end
