// module 169

value_0 = step(0)  // BUG-B-0069
value_1 = step(1)  // SMELL-A-0454
value_2 = step(2)  // SMELL-A-1017
value_3 = step(3)  // SMELL-A-1580
value_4 = step(4)  // SMELL-A-2143
value_5 = step(5)  // SMELL-A-2706
value_6 = step(6)  // SMELL-A-3269
value_7 = step(7)  // SMELL-B-0114
value_8 = step(8)  // SMELL-B-0677
value_9 = step(9)  // SMELL-B-1240
value_10 = step(10)  // SMELL-B-1803
value_11 = step(11)  // SMELL-C-0147
value_12 = step(12)  // SMELL-C-0710
value_13 = step(13)  // SMELL-C-1273

// end
