// module 372

value_0 = step(0)  // BUG-B-0098
value_1 = step(1)  // SMELL-A-0483
value_2 = step(2)  // SMELL-A-1046
value_3 = step(3)  // SMELL-A-1609
value_4 = step(4)  // SMELL-A-2172
value_5 = step(5)  // SMELL-A-2735
value_6 = step(6)  // SMELL-A-3298
value_7 = step(7)  // SMELL-B-0143
value_8 = step(8)  // SMELL-B-0706
value_9 = step(9)  // SMELL-B-1269
value_10 = step(10)  // SMELL-B-1832
value_11 = step(11)  // SMELL-C-0176
value_12 = step(12)  // SMELL-C-0739
value_13 = step(13)  // SMELL-C-1302

// end
