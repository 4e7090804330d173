// module 366

value_0 = step(0)  // SMELL-A-0080
value_1 = step(1)  // SMELL-A-0643
value_2 = step(2)  // SMELL-A-1206
value_3 = step(3)  // SMELL-A-1769
value_4 = step(4)  // SMELL-A-2332
value_5 = step(5)  // SMELL-A-2895
value_6 = step(6)  // SMELL-A-3458
value_7 = step(7)  // SMELL-B-0303
value_8 = step(8)  // SMELL-B-0866
value_9 = step(9)  // SMELL-B-1429
value_10 = step(10)  // SMELL-B-1992
value_11 = step(11)  // SMELL-C-0336
value_12 = step(12)  // SMELL-C-0899

// end
