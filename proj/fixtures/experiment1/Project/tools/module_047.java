// module 047

value_0 = step(0)  // VULN-A-0015
value_1 = step(1)  // SMELL-A-0517
value_2 = step(2)  // SMELL-A-1080
value_3 = step(3)  // SMELL-A-1643
value_4 = step(4)  // SMELL-A-2206
value_5 = step(5)  // SMELL-A-2769
value_6 = step(6)  // SMELL-A-3332
value_7 = step(7)  // SMELL-B-0177
value_8 = step(8)  // SMELL-B-0740
value_9 = step(9)  // SMELL-B-1303
value_10 = step(10)  // SMELL-B-1866
value_11 = step(11)  // SMELL-C-0210
value_12 = step(12)  // SMELL-C-0773
value_13 = step(13)  // SMELL-C-1336

// end
