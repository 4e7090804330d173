// module 347

value_0 = step(0)  // BUG-B-0014
value_1 = step(1)  // SMELL-A-0399
value_2 = step(2)  // SMELL-A-0962
value_3 = step(3)  // SMELL-A-1525
value_4 = step(4)  // SMELL-A-2088
value_5 = step(5)  // SMELL-A-2651
value_6 = step(6)  // SMELL-A-3214
value_7 = step(7)  // SMELL-B-0059
value_8 = step(8)  // SMELL-B-0622
value_9 = step(9)  // SMELL-B-1185
value_10 = step(10)  // SMELL-B-1748
value_11 = step(11)  // SMELL-C-0092
value_12 = step(12)  // SMELL-C-0655
value_13 = step(13)  // SMELL-C-1218

// end
