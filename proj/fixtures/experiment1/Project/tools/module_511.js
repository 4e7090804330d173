// module 511

value_0 = step(0)  // BUG-A-0074
value_1 = step(1)  // SMELL-A-0342
value_2 = step(2)  // SMELL-A-0905
value_3 = step(3)  // SMELL-A-1468
value_4 = step(4)  // SMELL-A-2031
value_5 = step(5)  // SMELL-A-2594
value_6 = step(6)  // SMELL-A-3157
value_7 = step(7)  // SMELL-B-0002
value_8 = step(8)  // SMELL-B-0565
value_9 = step(9)  // SMELL-B-1128
value_10 = step(10)  // SMELL-B-1691
value_11 = step(11)  // SMELL-C-0035
value_12 = step(12)  // SMELL-C-0598
value_13 = step(13)  // SMELL-C-1161

// end
