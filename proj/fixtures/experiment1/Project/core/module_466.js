// module 466

value_0 = step(0)  // BUG-B-0031
value_1 = step(1)  // SMELL-A-0416
value_2 = step(2)  // SMELL-A-0979
value_3 = step(3)  // SMELL-A-1542
value_4 = step(4)  // SMELL-A-2105
value_5 = step(5)  // SMELL-A-2668
value_6 = step(6)  // SMELL-A-3231
value_7 = step(7)  // SMELL-B-0076
value_8 = step(8)  // SMELL-B-0639
value_9 = step(9)  // SMELL-B-1202
value_10 = step(10)  // SMELL-B-1765
value_11 = step(11)  // SMELL-C-0109
value_12 = step(12)  // SMELL-C-0672
value_13 = step(13)  // SMELL-C-1235

// end
