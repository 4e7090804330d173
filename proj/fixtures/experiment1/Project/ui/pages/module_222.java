// module 222

value_0 = step(0)  // VULN-A-0040
value_1 = step(1)  // SMELL-A-0542
value_2 = step(2)  // SMELL-A-1105
value_3 = step(3)  // SMELL-A-1668
value_4 = step(4)  // SMELL-A-2231
value_5 = step(5)  // SMELL-A-2794
value_6 = step(6)  // SMELL-A-3357
value_7 = step(7)  // SMELL-B-0202
value_8 = step(8)  // SMELL-B-0765
value_9 = step(9)  // SMELL-B-1328
value_10 = step(10)  // SMELL-B-1891
value_11 = step(11)  // SMELL-C-0235
value_12 = step(12)  // SMELL-C-0798
value_13 = step(13)  // SMELL-C-1361

// end
