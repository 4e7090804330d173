// module 096

value_0 = step(0)  // VULN-A-0022
value_1 = step(1)  // SMELL-A-0524
value_2 = step(2)  // SMELL-A-1087
value_3 = step(3)  // SMELL-A-1650
value_4 = step(4)  // SMELL-A-2213
value_5 = step(5)  // SMELL-A-2776
value_6 = step(6)  // SMELL-A-3339
value_7 = step(7)  // SMELL-B-0184
value_8 = step(8)  // SMELL-B-0747
value_9 = step(9)  // SMELL-B-1310
value_10 = step(10)  // SMELL-B-1873
value_11 = step(11)  // SMELL-C-0217
value_12 = step(12)  // SMELL-C-0780
value_13 = step(13)  // SMELL-C-1343

// end
