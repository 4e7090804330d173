// module 546

value_0 = step(0)  // BUG-A-0079
value_1 = step(1)  // SMELL-A-0347
value_2 = step(2)  // SMELL-A-0910
value_3 = step(3)  // SMELL-A-1473
value_4 = step(4)  // SMELL-A-2036
value_5 = step(5)  // SMELL-A-2599
value_6 = step(6)  // SMELL-A-3162
value_7 = step(7)  // SMELL-B-0007
value_8 = step(8)  // SMELL-B-0570
value_9 = step(9)  // SMELL-B-1133
value_10 = step(10)  // SMELL-B-1696
value_11 = step(11)  // SMELL-C-0040
value_12 = step(12)  // SMELL-C-0603
value_13 = step(13)  // SMELL-C-1166

// end
