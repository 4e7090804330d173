// module 439

value_0 = step(0)  // SMELL-A-0010
value_1 = step(1)  // SMELL-A-0573
value_2 = step(2)  // SMELL-A-1136
value_3 = step(3)  // SMELL-A-1699
value_4 = step(4)  // SMELL-A-2262
value_5 = step(5)  // SMELL-A-2825
value_6 = step(6)  // SMELL-A-3388
value_7 = step(7)  // SMELL-B-0233
value_8 = step(8)  // SMELL-B-0796
value_9 = step(9)  // SMELL-B-1359
value_10 = step(10)  // SMELL-B-1922
value_11 = step(11)  // SMELL-C-0266
value_12 = step(12)  // SMELL-C-0829

// end
