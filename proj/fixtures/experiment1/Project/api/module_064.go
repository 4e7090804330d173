// module 064

value_0 = step(0)  // BUG-B-0054
value_1 = step(1)  // SMELL-A-0439
value_2 = step(2)  // SMELL-A-1002
value_3 = step(3)  // SMELL-A-1565
value_4 = step(4)  // SMELL-A-2128
value_5 = step(5)  // SMELL-A-2691
value_6 = step(6)  // SMELL-A-3254
value_7 = step(7)  // SMELL-B-0099
value_8 = step(8)  // SMELL-B-0662
value_9 = step(9)  // SMELL-B-1225
value_10 = step(10)  // SMELL-B-1788
value_11 = step(11)  // SMELL-C-0132
value_12 = step(12)  // SMELL-C-0695
value_13 = step(13)  // SMELL-C-1258

// end
