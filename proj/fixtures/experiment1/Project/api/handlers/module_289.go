// module 289

value_0 = step(0)  // SMELL-A-0069
value_1 = step(1)  // SMELL-A-0632
value_2 = step(2)  // SMELL-A-1195
value_3 = step(3)  // SMELL-A-1758
value_4 = step(4)  // SMELL-A-2321
value_5 = step(5)  // SMELL-A-2884
value_6 = step(6)  // SMELL-A-3447
value_7 = step(7)  // SMELL-B-0292
value_8 = step(8)  // SMELL-B-0855
value_9 = step(9)  // SMELL-B-1418
value_10 = step(10)  // SMELL-B-1981
value_11 = step(11)  // SMELL-C-0325
value_12 = step(12)  // SMELL-C-0888

// end
