// module 207

value_0 = step(0)  // BUG-A-0111
value_1 = step(1)  // SMELL-A-0379
value_2 = step(2)  // SMELL-A-0942
value_3 = step(3)  // SMELL-A-1505
value_4 = step(4)  // SMELL-A-2068
value_5 = step(5)  // SMELL-A-2631
value_6 = step(6)  // SMELL-A-3194
value_7 = step(7)  // SMELL-B-0039
value_8 = step(8)  // SMELL-B-0602
value_9 = step(9)  // SMELL-B-1165
value_10 = step(10)  // SMELL-B-1728
value_11 = step(11)  // SMELL-C-0072
value_12 = step(12)  // SMELL-C-0635
value_13 = step(13)  // SMELL-C-1198

// end
