// module 134

value_0 = step(0)  // BUG-B-0064
value_1 = step(1)  // SMELL-A-0449
value_2 = step(2)  // SMELL-A-1012
value_3 = step(3)  // SMELL-A-1575
value_4 = step(4)  // SMELL-A-2138
value_5 = step(5)  // SMELL-A-2701
value_6 = step(6)  // SMELL-A-3264
value_7 = step(7)  // SMELL-B-0109
value_8 = step(8)  // SMELL-B-0672
value_9 = step(9)  // SMELL-B-1235
value_10 = step(10)  // SMELL-B-1798
value_11 = step(11)  // SMELL-C-0142
value_12 = step(12)  // SMELL-C-0705
value_13 = step(13)  // SMELL-C-1268

// end
