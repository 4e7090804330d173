// module 231

value_0 = step(0)  // BUG-A-0034
value_1 = step(1)  // SMELL-A-0302
value_2 = step(2)  // SMELL-A-0865
value_3 = step(3)  // SMELL-A-1428
value_4 = step(4)  // SMELL-A-1991
value_5 = step(5)  // SMELL-A-2554
value_6 = step(6)  // SMELL-A-3117
value_7 = step(7)  // SMELL-A-3680
value_8 = step(8)  // SMELL-B-0525
value_9 = step(9)  // SMELL-B-1088
value_10 = step(10)  // SMELL-B-1651
value_11 = step(11)  // SMELL-B-2214
value_12 = step(12)  // SMELL-C-0558
value_13 = step(13)  // SMELL-C-1121

// end
