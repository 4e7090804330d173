// module 006

value_0 = step(0)  // SMELL-A-0109
value_1 = step(1)  // SMELL-A-0672
value_2 = step(2)  // SMELL-A-1235
value_3 = step(3)  // SMELL-A-1798
value_4 = step(4)  // SMELL-A-2361
value_5 = step(5)  // SMELL-A-2924
value_6 = step(6)  // SMELL-A-3487
value_7 = step(7)  // SMELL-B-0332
value_8 = step(8)  // SMELL-B-0895
value_9 = step(9)  // SMELL-B-1458
value_10 = step(10)  // SMELL-B-2021
value_11 = step(11)  // SMELL-C-0365
value_12 = step(12)  // SMELL-C-0928

// end
