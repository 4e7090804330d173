// module 247

value_0 = step(0)  // SMELL-A-0063
value_1 = step(1)  // SMELL-A-0626
value_2 = step(2)  // SMELL-A-1189
value_3 = step(3)  // SMELL-A-1752
value_4 = step(4)  // SMELL-A-2315
value_5 = step(5)  // SMELL-A-2878
value_6 = step(6)  // SMELL-A-3441
value_7 = step(7)  // SMELL-B-0286
value_8 = step(8)  // SMELL-B-0849
value_9 = step(9)  // SMELL-B-1412
value_10 = step(10)  // SMELL-B-1975
value_11 = step(11)  // SMELL-C-0319
value_12 = step(12)  // SMELL-C-0882

// end
