// module 257

value_0 = step(0)  // VULN-A-0045
value_1 = step(1)  // SMELL-A-0547
value_2 = step(2)  // SMELL-A-1110
value_3 = step(3)  // SMELL-A-1673
value_4 = step(4)  // SMELL-A-2236
value_5 = step(5)  // SMELL-A-2799
value_6 = step(6)  // SMELL-A-3362
value_7 = step(7)  // SMELL-B-0207
value_8 = step(8)  // SMELL-B-0770
value_9 = step(9)  // SMELL-B-1333
value_10 = step(10)  // SMELL-B-1896
value_11 = step(11)  // SMELL-C-0240
value_12 = step(12)  // SMELL-C-0803
value_13 = step(13)  // SMELL-C-1366

// end
