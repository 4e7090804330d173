// module 522

value_0 = step(0)  // BUG-B-0039
value_1 = step(1)  // SMELL-A-0424
value_2 = step(2)  // SMELL-A-0987
value_3 = step(3)  // SMELL-A-1550
value_4 = step(4)  // SMELL-A-2113
value_5 = step(5)  // SMELL-A-2676
value_6 = step(6)  // SMELL-A-3239
value_7 = step(7)  // SMELL-B-0084
value_8 = step(8)  // SMELL-B-0647
value_9 = step(9)  // SMELL-B-1210
value_10 = step(10)  // SMELL-B-1773
value_11 = step(11)  // SMELL-C-0117
value_12 = step(12)  // SMELL-C-0680
value_13 = step(13)  // SMELL-C-1243

// end
