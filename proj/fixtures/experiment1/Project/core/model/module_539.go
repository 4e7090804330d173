// module 539

value_0 = step(0)  // BUG-A-0078
value_1 = step(1)  // SMELL-A-0346
value_2 = step(2)  // SMELL-A-0909
value_3 = step(3)  // SMELL-A-1472
value_4 = step(4)  // SMELL-A-2035
value_5 = step(5)  // SMELL-A-2598
value_6 = step(6)  // SMELL-A-3161
value_7 = step(7)  // SMELL-B-0006
value_8 = step(8)  // SMELL-B-0569
value_9 = step(9)  // SMELL-B-1132
value_10 = step(10)  // SMELL-B-1695
value_11 = step(11)  // SMELL-C-0039
value_12 = step(12)  // SMELL-C-0602
value_13 = step(13)  // SMELL-C-1165

// end
