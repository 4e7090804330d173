// module 387

value_0 = step(0)  // SMELL-A-0083
value_1 = step(1)  // SMELL-A-0646
value_2 = step(2)  // SMELL-A-1209
value_3 = step(3)  // SMELL-A-1772
value_4 = step(4)  // SMELL-A-2335
value_5 = step(5)  // SMELL-A-2898
value_6 = step(6)  // SMELL-A-3461
value_7 = step(7)  // SMELL-B-0306
value_8 = step(8)  // SMELL-B-0869
value_9 = step(9)  // SMELL-B-1432
value_10 = step(10)  // SMELL-B-1995
value_11 = step(11)  // SMELL-C-0339
value_12 = step(12)  // SMELL-C-0902

// end
