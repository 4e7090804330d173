// module 417

value_0 = step(0)  // BUG-B-0024
value_1 = step(1)  // SMELL-A-0409
value_2 = step(2)  // SMELL-A-0972
value_3 = step(3)  // SMELL-A-1535
value_4 = step(4)  // SMELL-A-2098
value_5 = step(5)  // SMELL-A-2661
value_6 = step(6)  // SMELL-A-3224
value_7 = step(7)  // SMELL-B-0069
value_8 = step(8)  // SMELL-B-0632
value_9 = step(9)  // SMELL-B-1195
value_10 = step(10)  // SMELL-B-1758
value_11 = step(11)  // SMELL-C-0102
value_12 = step(12)  // SMELL-C-0665
value_13 = step(13)  // SMELL-C-1228

// end
