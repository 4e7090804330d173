// module 121

value_0 = step(0)  // SMELL-A-0045
value_1 = step(1)  // SMELL-A-0608
value_2 = step(2)  // SMELL-A-1171
value_3 = step(3)  // SMELL-A-1734
value_4 = step(4)  // SMELL-A-2297
value_5 = step(5)  // SMELL-A-2860
value_6 = step(6)  // SMELL-A-3423
value_7 = step(7)  // SMELL-B-0268
value_8 = step(8)  // SMELL-B-0831
value_9 = step(9)  // SMELL-B-1394
value_10 = step(10)  // SMELL-B-1957
value_11 = step(11)  // SMELL-C-0301
value_12 = step(12)  // SMELL-C-0864

// end
