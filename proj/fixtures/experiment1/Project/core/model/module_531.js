// module 531

value_0 = step(0)  // SMELL-A-0184
value_1 = step(1)  // SMELL-A-0747
value_2 = step(2)  // SMELL-A-1310
value_3 = step(3)  // SMELL-A-1873
value_4 = step(4)  // SMELL-A-2436
value_5 = step(5)  // SMELL-A-2999
value_6 = step(6)  // SMELL-A-3562
value_7 = step(7)  // SMELL-B-0407
value_8 = step(8)  // SMELL-B-0970
value_9 = step(9)  // SMELL-B-1533
value_10 = step(10)  // SMELL-B-2096
value_11 = step(11)  // SMELL-C-0440
value_12 = step(12)  // SMELL-C-1003

// end
