// module 449

value_0 = step(0)  // BUG-B-0109
value_1 = step(1)  // SMELL-A-0494
value_2 = step(2)  // SMELL-A-1057
value_3 = step(3)  // SMELL-A-1620
value_4 = step(4)  // SMELL-A-2183
value_5 = step(5)  // SMELL-A-2746
value_6 = step(6)  // SMELL-A-3309
value_7 = step(7)  // SMELL-B-0154
value_8 = step(8)  // SMELL-B-0717
value_9 = step(9)  // SMELL-B-1280
value_10 = step(10)  // SMELL-B-1843
value_11 = step(11)  // SMELL-C-0187
value_12 = step(12)  // SMELL-C-0750
value_13 = step(13)  // SMELL-C-1313

// end
