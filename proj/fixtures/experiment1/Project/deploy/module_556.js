// module 556

value_0 = step(0)  // SMELL-A-0268
value_1 = step(1)  // SMELL-A-0831
value_2 = step(2)  // SMELL-A-1394
value_3 = step(3)  // SMELL-A-1957
value_4 = step(4)  // SMELL-A-2520
value_5 = step(5)  // SMELL-A-3083
value_6 = step(6)  // SMELL-A-3646
value_7 = step(7)  // SMELL-B-0491
value_8 = step(8)  // SMELL-B-1054
value_9 = step(9)  // SMELL-B-1617
value_10 = step(10)  // SMELL-B-2180
value_11 = step(11)  // SMELL-C-0524
value_12 = step(12)  // SMELL-C-1087

// end
