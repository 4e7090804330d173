// module 461

value_0 = step(0)  // SMELL-A-0174
value_1 = step(1)  // SMELL-A-0737
value_2 = step(2)  // SMELL-A-1300
value_3 = step(3)  // SMELL-A-1863
value_4 = step(4)  // SMELL-A-2426
value_5 = step(5)  // SMELL-A-2989
value_6 = step(6)  // SMELL-A-3552
value_7 = step(7)  // SMELL-B-0397
value_8 = step(8)  // SMELL-B-0960
value_9 = step(9)  // SMELL-B-1523
value_10 = step(10)  // SMELL-B-2086
value_11 = step(11)  // SMELL-C-0430
value_12 = step(12)  // SMELL-C-0993

// end
