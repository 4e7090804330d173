// module 362

value_0 = step(0)  // VULN-B-0001
value_1 = step(1)  // SMELL-A-0562
value_2 = step(2)  // SMELL-A-1125
value_3 = step(3)  // SMELL-A-1688
value_4 = step(4)  // SMELL-A-2251
value_5 = step(5)  // SMELL-A-2814
value_6 = step(6)  // SMELL-A-3377
value_7 = step(7)  // SMELL-B-0222
value_8 = step(8)  // SMELL-B-0785
value_9 = step(9)  // SMELL-B-1348
value_10 = step(10)  // SMELL-B-1911
value_11 = step(11)  // SMELL-C-0255
value_12 = step(12)  // SMELL-C-0818

// end
