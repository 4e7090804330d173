// module 486

value_0 = step(0)  // SMELL-A-0258
value_1 = step(1)  // SMELL-A-0821
value_2 = step(2)  // SMELL-A-1384
value_3 = step(3)  // SMELL-A-1947
value_4 = step(4)  // SMELL-A-2510
value_5 = step(5)  // SMELL-A-3073
value_6 = step(6)  // SMELL-A-3636
value_7 = step(7)  // SMELL-B-0481
value_8 = step(8)  // SMELL-B-1044
value_9 = step(9)  // SMELL-B-1607
value_10 = step(10)  // SMELL-B-2170
value_11 = step(11)  // SMELL-C-0514
value_12 = step(12)  // SMELL-C-1077

// end
