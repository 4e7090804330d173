// module 341

value_0 = step(0)  // VULN-A-0057
value_1 = step(1)  // SMELL-A-0559
value_2 = step(2)  // SMELL-A-1122
value_3 = step(3)  // SMELL-A-1685
value_4 = step(4)  // SMELL-A-2248
value_5 = step(5)  // SMELL-A-2811
value_6 = step(6)  // SMELL-A-3374
value_7 = step(7)  // SMELL-B-0219
value_8 = step(8)  // SMELL-B-0782
value_9 = step(9)  // SMELL-B-1345
value_10 = step(10)  // SMELL-B-1908
value_11 = step(11)  // SMELL-C-0252
value_12 = step(12)  // SMELL-C-0815

// end
