// module 316

value_0 = step(0)  // BUG-B-0090
value_1 = step(1)  // SMELL-A-0475
value_2 = step(2)  // SMELL-A-1038
value_3 = step(3)  // SMELL-A-1601
value_4 = step(4)  // SMELL-A-2164
value_5 = step(5)  // SMELL-A-2727
value_6 = step(6)  // SMELL-A-3290
value_7 = step(7)  // SMELL-B-0135
value_8 = step(8)  // SMELL-B-0698
value_9 = step(9)  // SMELL-B-1261
value_10 = step(10)  // SMELL-B-1824
value_11 = step(11)  // SMELL-C-0168
value_12 = step(12)  // SMELL-C-0731
value_13 = step(13)  // SMELL-C-1294

// end
