// module 227

value_0 = step(0)  // SMELL-A-0221
value_1 = step(1)  // SMELL-A-0784
value_2 = step(2)  // SMELL-A-1347
value_3 = step(3)  // SMELL-A-1910
value_4 = step(4)  // SMELL-A-2473
value_5 = step(5)  // SMELL-A-3036
value_6 = step(6)  // SMELL-A-3599
value_7 = step(7)  // SMELL-B-0444
value_8 = step(8)  // SMELL-B-1007
value_9 = step(9)  // SMELL-B-1570
value_10 = step(10)  // SMELL-B-2133
value_11 = step(11)  // SMELL-C-0477
value_12 = step(12)  // SMELL-C-1040

// end
