// module 357

value_0 = step(0)  // BUG-A-0052
value_1 = step(1)  // SMELL-A-0320
value_2 = step(2)  // SMELL-A-0883
value_3 = step(3)  // SMELL-A-1446
value_4 = step(4)  // SMELL-A-2009
value_5 = step(5)  // SMELL-A-2572
value_6 = step(6)  // SMELL-A-3135
value_7 = step(7)  // SMELL-A-3698
value_8 = step(8)  // SMELL-B-0543
value_9 = step(9)  // SMELL-B-1106
value_10 = step(10)  // SMELL-B-1669
value_11 = step(11)  // SMELL-C-0013
value_12 = step(12)  // SMELL-C-0576
value_13 = step(13)  // SMELL-C-1139

// end
