// module 491

value_0 = step(0)  // BUG-B-0115
value_1 = step(1)  // SMELL-A-0500
value_2 = step(2)  // SMELL-A-1063
value_3 = step(3)  // SMELL-A-1626
value_4 = step(4)  // SMELL-A-2189
value_5 = step(5)  // SMELL-A-2752
value_6 = step(6)  // SMELL-A-3315
value_7 = step(7)  // SMELL-B-0160
value_8 = step(8)  // SMELL-B-0723
value_9 = step(9)  // SMELL-B-1286
value_10 = step(10)  // SMELL-B-1849
value_11 = step(11)  // SMELL-C-0193
value_12 = step(12)  // SMELL-C-0756
value_13 = step(13)  // SMELL-C-1319

// end
