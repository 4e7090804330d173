// module 099

value_0 = step(0)  // BUG-B-0059
value_1 = step(1)  // SMELL-A-0444
value_2 = step(2)  // SMELL-A-1007
value_3 = step(3)  // SMELL-A-1570
value_4 = step(4)  // SMELL-A-2133
value_5 = step(5)  // SMELL-A-2696
value_6 = step(6)  // SMELL-A-3259
value_7 = step(7)  // SMELL-B-0104
value_8 = step(8)  // SMELL-B-0667
value_9 = step(9)  // SMELL-B-1230
value_10 = step(10)  // SMELL-B-1793
value_11 = step(11)  // SMELL-C-0137
value_12 = step(12)  // SMELL-C-0700
value_13 = step(13)  // SMELL-C-1263

// end
