// module 549

value_0 = step(0)  // SMELL-A-0267
value_1 = step(1)  // SMELL-A-0830
value_2 = step(2)  // SMELL-A-1393
value_3 = step(3)  // SMELL-A-1956
value_4 = step(4)  // SMELL-A-2519
value_5 = step(5)  // SMELL-A-3082
value_6 = step(6)  // SMELL-A-3645
value_7 = step(7)  // SMELL-B-0490
value_8 = step(8)  // SMELL-B-1053
value_9 = step(9)  // SMELL-B-1616
value_10 = step(10)  // SMELL-B-2179
value_11 = step(11)  // SMELL-C-0523
value_12 = step(12)  // SMELL-C-1086

// end
