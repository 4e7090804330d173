// module 334

value_0 = step(0)  // VULN-A-0056
value_1 = step(1)  // SMELL-A-0558
value_2 = step(2)  // SMELL-A-1121
value_3 = step(3)  // SMELL-A-1684
value_4 = step(4)  // SMELL-A-2247
value_5 = step(5)  // SMELL-A-2810
value_6 = step(6)  // SMELL-A-3373
value_7 = step(7)  // SMELL-B-0218
value_8 = step(8)  // SMELL-B-0781
value_9 = step(9)  // SMELL-B-1344
value_10 = step(10)  // SMELL-B-1907
value_11 = step(11)  // SMELL-C-0251
value_12 = step(12)  // SMELL-C-0814

// end
