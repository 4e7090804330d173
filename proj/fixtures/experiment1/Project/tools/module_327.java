// module 327

value_0 = step(0)  // VULN-A-0055
value_1 = step(1)  // SMELL-A-0557
value_2 = step(2)  // SMELL-A-1120
value_3 = step(3)  // SMELL-A-1683
value_4 = step(4)  // SMELL-A-2246
value_5 = step(5)  // SMELL-A-2809
value_6 = step(6)  // SMELL-A-3372
value_7 = step(7)  // SMELL-B-0217
value_8 = step(8)  // SMELL-B-0780
value_9 = step(9)  // SMELL-B-1343
value_10 = step(10)  // SMELL-B-1906
value_11 = step(11)  // SMELL-C-0250
value_12 = step(12)  // SMELL-C-0813

// end
