// module 299

value_0 = step(0)  // VULN-A-0051
value_1 = step(1)  // SMELL-A-0553
value_2 = step(2)  // SMELL-A-1116
value_3 = step(3)  // SMELL-A-1679
value_4 = step(4)  // SMELL-A-2242
value_5 = step(5)  // SMELL-A-2805
value_6 = step(6)  // SMELL-A-3368
value_7 = step(7)  // SMELL-B-0213
value_8 = step(8)  // SMELL-B-0776
value_9 = step(9)  // SMELL-B-1339
value_10 = step(10)  // SMELL-B-1902
value_11 = step(11)  // SMELL-C-0246
value_12 = step(12)  // SMELL-C-0809

// end
