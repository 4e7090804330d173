// module 529

value_0 = step(0)  // BUG-B-0040
value_1 = step(1)  // SMELL-A-0425
value_2 = step(2)  // SMELL-A-0988
value_3 = step(3)  // SMELL-A-1551
value_4 = step(4)  // SMELL-A-2114
value_5 = step(5)  // SMELL-A-2677
value_6 = step(6)  // SMELL-A-3240
value_7 = step(7)  // SMELL-B-0085
value_8 = step(8)  // SMELL-B-0648
value_9 = step(9)  // SMELL-B-1211
value_10 = step(10)  // SMELL-B-1774
value_11 = step(11)  // SMELL-C-0118
value_12 = step(12)  // SMELL-C-0681
value_13 = step(13)  // SMELL-C-1244

// end
