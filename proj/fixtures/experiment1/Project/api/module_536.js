// module 536

value_0 = step(0)  // BUG-B-0041
value_1 = step(1)  // SMELL-A-0426
value_2 = step(2)  // SMELL-A-0989
value_3 = step(3)  // SMELL-A-1552
value_4 = step(4)  // SMELL-A-2115
value_5 = step(5)  // SMELL-A-2678
value_6 = step(6)  // SMELL-A-3241
value_7 = step(7)  // SMELL-B-0086
value_8 = step(8)  // SMELL-B-0649
value_9 = step(9)  // SMELL-B-1212
value_10 = step(10)  // SMELL-B-1775
value_11 = step(11)  // SMELL-C-0119
value_12 = step(12)  // SMELL-C-0682
value_13 = step(13)  // SMELL-C-1245

// end
