// module 369

value_0 = step(0)  // VULN-B-0002
value_1 = step(1)  // SMELL-A-0563
value_2 = step(2)  // SMELL-A-1126
value_3 = step(3)  // SMELL-A-1689
value_4 = step(4)  // SMELL-A-2252
value_5 = step(5)  // SMELL-A-2815
value_6 = step(6)  // SMELL-A-3378
value_7 = step(7)  // SMELL-B-0223
value_8 = step(8)  // SMELL-B-0786
value_9 = step(9)  // SMELL-B-1349
value_10 = step(10)  // SMELL-B-1912
value_11 = step(11)  // SMELL-C-0256
value_12 = step(12)  // SMELL-C-0819

// end
