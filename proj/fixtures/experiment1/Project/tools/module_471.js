// module 471

value_0 = step(0)  // SMELL-A-0095
value_1 = step(1)  // SMELL-A-0658
value_2 = step(2)  // SMELL-A-1221
value_3 = step(3)  // SMELL-A-1784
value_4 = step(4)  // SMELL-A-2347
value_5 = step(5)  // SMELL-A-2910
value_6 = step(6)  // SMELL-A-3473
value_7 = step(7)  // SMELL-B-0318
value_8 = step(8)  // SMELL-B-0881
value_9 = step(9)  // SMELL-B-1444
value_10 = step(10)  // SMELL-B-2007
value_11 = step(11)  // SMELL-C-0351
value_12 = step(12)  // SMELL-C-0914

// end
