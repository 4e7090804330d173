// module 497

value_0 = step(0)  // BUG-A-0072
value_1 = step(1)  // SMELL-A-0340
value_2 = step(2)  // SMELL-A-0903
value_3 = step(3)  // SMELL-A-1466
value_4 = step(4)  // SMELL-A-2029
value_5 = step(5)  // SMELL-A-2592
value_6 = step(6)  // SMELL-A-3155
value_7 = step(7)  // SMELL-A-3718
value_8 = step(8)  // SMELL-B-0563
value_9 = step(9)  // SMELL-B-1126
value_10 = step(10)  // SMELL-B-1689
value_11 = step(11)  // SMELL-C-0033
value_12 = step(12)  // SMELL-C-0596
value_13 = step(13)  // SMELL-C-1159

// end
