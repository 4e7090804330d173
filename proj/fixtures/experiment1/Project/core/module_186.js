// module 186

value_0 = step(0)  // BUG-A-0108
value_1 = step(1)  // SMELL-A-0376
value_2 = step(2)  // SMELL-A-0939
value_3 = step(3)  // SMELL-A-1502
value_4 = step(4)  // SMELL-A-2065
value_5 = step(5)  // SMELL-A-2628
value_6 = step(6)  // SMELL-A-3191
value_7 = step(7)  // SMELL-B-0036
value_8 = step(8)  // SMELL-B-0599
value_9 = step(9)  // SMELL-B-1162
value_10 = step(10)  // SMELL-B-1725
value_11 = step(11)  // SMELL-C-0069
value_12 = step(12)  // SMELL-C-0632
value_13 = step(13)  // SMELL-C-1195

// end
