// module 501

value_0 = step(0)  // BUG-B-0036
value_1 = step(1)  // SMELL-A-0421
value_2 = step(2)  // SMELL-A-0984
value_3 = step(3)  // SMELL-A-1547
value_4 = step(4)  // SMELL-A-2110
value_5 = step(5)  // SMELL-A-2673
value_6 = step(6)  // SMELL-A-3236
value_7 = step(7)  // SMELL-B-0081
value_8 = step(8)  // SMELL-B-0644
value_9 = step(9)  // SMELL-B-1207
value_10 = step(10)  // SMELL-B-1770
value_11 = step(11)  // SMELL-C-0114
value_12 = step(12)  // SMELL-C-0677
value_13 = step(13)  // SMELL-C-1240

// end
