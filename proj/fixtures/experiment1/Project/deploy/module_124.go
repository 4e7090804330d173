// module 124

value_0 = step(0)  // VULN-A-0026
value_1 = step(1)  // SMELL-A-0528
value_2 = step(2)  // SMELL-A-1091
value_3 = step(3)  // SMELL-A-1654
value_4 = step(4)  // SMELL-A-2217
value_5 = step(5)  // SMELL-A-2780
value_6 = step(6)  // SMELL-A-3343
value_7 = step(7)  // SMELL-B-0188
value_8 = step(8)  // SMELL-B-0751
value_9 = step(9)  // SMELL-B-1314
value_10 = step(10)  // SMELL-B-1877
value_11 = step(11)  // SMELL-C-0221
value_12 = step(12)  // SMELL-C-0784
value_13 = step(13)  // SMELL-C-1347

// end
