// module 161

value_0 = step(0)  // BUG-A-0024
value_1 = step(1)  // SMELL-A-0292
value_2 = step(2)  // SMELL-A-0855
value_3 = step(3)  // SMELL-A-1418
value_4 = step(4)  // SMELL-A-1981
value_5 = step(5)  // SMELL-A-2544
value_6 = step(6)  // SMELL-A-3107
value_7 = step(7)  // SMELL-A-3670
value_8 = step(8)  // SMELL-B-0515
value_9 = step(9)  // SMELL-B-1078
value_10 = step(10)  // SMELL-B-1641
value_11 = step(11)  // SMELL-B-2204
value_12 = step(12)  // SMELL-C-0548
value_13 = step(13)  // SMELL-C-1111

// end
