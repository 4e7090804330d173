// module 346

value_0 = step(0)  // SMELL-A-0238
value_1 = step(1)  // SMELL-A-0801
value_2 = step(2)  // SMELL-A-1364
value_3 = step(3)  // SMELL-A-1927
value_4 = step(4)  // SMELL-A-2490
value_5 = step(5)  // SMELL-A-3053
value_6 = step(6)  // SMELL-A-3616
value_7 = step(7)  // SMELL-B-0461
value_8 = step(8)  // SMELL-B-1024
value_9 = step(9)  // SMELL-B-1587
value_10 = step(10)  // SMELL-B-2150
value_11 = step(11)  // SMELL-C-0494
value_12 = step(12)  // SMELL-C-1057

// end
