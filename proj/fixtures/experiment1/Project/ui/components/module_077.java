// module 077

value_0 = step(0)  // BUG-A-0012
value_1 = step(1)  // SMELL-A-0280
value_2 = step(2)  // SMELL-A-0843
value_3 = step(3)  // SMELL-A-1406
value_4 = step(4)  // SMELL-A-1969
value_5 = step(5)  // SMELL-A-2532
value_6 = step(6)  // SMELL-A-3095
value_7 = step(7)  // SMELL-A-3658
value_8 = step(8)  // SMELL-B-0503
value_9 = step(9)  // SMELL-B-1066
value_10 = step(10)  // SMELL-B-1629
value_11 = step(11)  // SMELL-B-2192
value_12 = step(12)  // SMELL-C-0536
value_13 = step(13)  // SMELL-C-1099

// end
