// module 399

value_0 = step(0)  // BUG-A-0058
value_1 = step(1)  // SMELL-A-0326
value_2 = step(2)  // SMELL-A-0889
value_3 = step(3)  // SMELL-A-1452
value_4 = step(4)  // SMELL-A-2015
value_5 = step(5)  // SMELL-A-2578
value_6 = step(6)  // SMELL-A-3141
value_7 = step(7)  // SMELL-A-3704
value_8 = step(8)  // SMELL-B-0549
value_9 = step(9)  // SMELL-B-1112
value_10 = step(10)  // SMELL-B-1675
value_11 = step(11)  // SMELL-C-0019
value_12 = step(12)  // SMELL-C-0582
value_13 = step(13)  // SMELL-C-1145

// end
