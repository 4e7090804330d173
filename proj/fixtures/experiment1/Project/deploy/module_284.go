// module 284

value_0 = step(0)  // BUG-B-0005
value_1 = step(1)  // SMELL-A-0390
value_2 = step(2)  // SMELL-A-0953
value_3 = step(3)  // SMELL-A-1516
value_4 = step(4)  // SMELL-A-2079
value_5 = step(5)  // SMELL-A-2642
value_6 = step(6)  // SMELL-A-3205
value_7 = step(7)  // SMELL-B-0050
value_8 = step(8)  // SMELL-B-0613
value_9 = step(9)  // SMELL-B-1176
value_10 = step(10)  // SMELL-B-1739
value_11 = step(11)  // SMELL-C-0083
value_12 = step(12)  // SMELL-C-0646
value_13 = step(13)  // SMELL-C-1209

// end
