// module 094

value_0 = step(0)  // SMELL-A-0202
value_1 = step(1)  // SMELL-A-0765
value_2 = step(2)  // SMELL-A-1328
value_3 = step(3)  // SMELL-A-1891
value_4 = step(4)  // SMELL-A-2454
value_5 = step(5)  // SMELL-A-3017
value_6 = step(6)  // SMELL-A-3580
value_7 = step(7)  // SMELL-B-0425
value_8 = step(8)  // SMELL-B-0988
value_9 = step(9)  // SMELL-B-1551
value_10 = step(10)  // SMELL-B-2114
value_11 = step(11)  // SMELL-C-0458
value_12 = step(12)  // SMELL-C-1021

// end
