// module 309

value_0 = step(0)  // BUG-B-0089
value_1 = step(1)  // SMELL-A-0474
value_2 = step(2)  // SMELL-A-1037
value_3 = step(3)  // SMELL-A-1600
value_4 = step(4)  // SMELL-A-2163
value_5 = step(5)  // SMELL-A-2726
value_6 = step(6)  // SMELL-A-3289
value_7 = step(7)  // SMELL-B-0134
value_8 = step(8)  // SMELL-B-0697
value_9 = step(9)  // SMELL-B-1260
value_10 = step(10)  // SMELL-B-1823
value_11 = step(11)  // SMELL-C-0167
value_12 = step(12)  // SMELL-C-0730
value_13 = step(13)  // SMELL-C-1293

// end
