// module 164

value_0 = step(0)  // SMELL-A-0212
value_1 = step(1)  // SMELL-A-0775
value_2 = step(2)  // SMELL-A-1338
value_3 = step(3)  // SMELL-A-1901
value_4 = step(4)  // SMELL-A-2464
value_5 = step(5)  // SMELL-A-3027
value_6 = step(6)  // SMELL-A-3590
value_7 = step(7)  // SMELL-B-0435
value_8 = step(8)  // SMELL-B-0998
value_9 = step(9)  // SMELL-B-1561
value_10 = step(10)  // SMELL-B-2124
value_11 = step(11)  // SMELL-C-0468
value_12 = step(12)  // SMELL-C-1031

// end
