// module 267

value_0 = step(0)  // BUG-B-0083
value_1 = step(1)  // SMELL-A-0468
value_2 = step(2)  // SMELL-A-1031
value_3 = step(3)  // SMELL-A-1594
value_4 = step(4)  // SMELL-A-2157
value_5 = step(5)  // SMELL-A-2720
value_6 = step(6)  // SMELL-A-3283
value_7 = step(7)  // SMELL-B-0128
value_8 = step(8)  // SMELL-B-0691
value_9 = step(9)  // SMELL-B-1254
value_10 = step(10)  // SMELL-B-1817
value_11 = step(11)  // SMELL-C-0161
value_12 = step(12)  // SMELL-C-0724
value_13 = step(13)  // SMELL-C-1287

// end
