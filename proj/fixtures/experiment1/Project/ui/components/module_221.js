// module 221

value_0 = step(0)  // BUG-A-0113
value_1 = step(1)  // SMELL-A-0381
value_2 = step(2)  // SMELL-A-0944
value_3 = step(3)  // SMELL-A-1507
value_4 = step(4)  // SMELL-A-2070
value_5 = step(5)  // SMELL-A-2633
value_6 = step(6)  // SMELL-A-3196
value_7 = step(7)  // SMELL-B-0041
value_8 = step(8)  // SMELL-B-0604
value_9 = step(9)  // SMELL-B-1167
value_10 = step(10)  // SMELL-B-1730
value_11 = step(11)  // SMELL-C-0074
value_12 = step(12)  // SMELL-C-0637
value_13 = step(13)  // SMELL-C-1200

// end
