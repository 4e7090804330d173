// module 066

value_0 = step(0)  // SMELL-A-0198
value_1 = step(1)  // SMELL-A-0761
value_2 = step(2)  // SMELL-A-1324
value_3 = step(3)  // SMELL-A-1887
value_4 = step(4)  // SMELL-A-2450
value_5 = step(5)  // SMELL-A-3013
value_6 = step(6)  // SMELL-A-3576
value_7 = step(7)  // SMELL-B-0421
value_8 = step(8)  // SMELL-B-0984
value_9 = step(9)  // SMELL-B-1547
value_10 = step(10)  // SMELL-B-2110
value_11 = step(11)  // SMELL-C-0454
value_12 = step(12)  // SMELL-C-1017

// end
