// module 262

value_0 = step(0)  // SMELL-A-0226
value_1 = step(1)  // SMELL-A-0789
value_2 = step(2)  // SMELL-A-1352
value_3 = step(3)  // SMELL-A-1915
value_4 = step(4)  // SMELL-A-2478
value_5 = step(5)  // SMELL-A-3041
value_6 = step(6)  // SMELL-A-3604
value_7 = step(7)  // SMELL-B-0449
value_8 = step(8)  // SMELL-B-1012
value_9 = step(9)  // SMELL-B-1575
value_10 = step(10)  // SMELL-B-2138
value_11 = step(11)  // SMELL-C-0482
value_12 = step(12)  // SMELL-C-1045

// end
