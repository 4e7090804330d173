// module 322

value_0 = step(0)  // BUG-A-0047
value_1 = step(1)  // SMELL-A-0315
value_2 = step(2)  // SMELL-A-0878
value_3 = step(3)  // SMELL-A-1441
value_4 = step(4)  // SMELL-A-2004
value_5 = step(5)  // SMELL-A-2567
value_6 = step(6)  // SMELL-A-3130
value_7 = step(7)  // SMELL-A-3693
value_8 = step(8)  // SMELL-B-0538
value_9 = step(9)  // SMELL-B-1101
value_10 = step(10)  // SMELL-B-1664
value_11 = step(11)  // SMELL-C-0008
value_12 = step(12)  // SMELL-C-0571
value_13 = step(13)  // SMELL-C-1134

// end
