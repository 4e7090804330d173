// module 039

value_0 = step(0)  // BUG-A-0087
value_1 = step(1)  // SMELL-A-0355
value_2 = step(2)  // SMELL-A-0918
value_3 = step(3)  // SMELL-A-1481
value_4 = step(4)  // SMELL-A-2044
value_5 = step(5)  // SMELL-A-2607
value_6 = step(6)  // SMELL-A-3170
value_7 = step(7)  // SMELL-B-0015
value_8 = step(8)  // SMELL-B-0578
value_9 = step(9)  // SMELL-B-1141
value_10 = step(10)  // SMELL-B-1704
value_11 = step(11)  // SMELL-C-0048
value_12 = step(12)  // SMELL-C-0611
value_13 = step(13)  // SMELL-C-1174

// end
