// module 179

value_0 = step(0)  // BUG-A-0107
value_1 = step(1)  // SMELL-A-0375
value_2 = step(2)  // SMELL-A-0938
value_3 = step(3)  // SMELL-A-1501
value_4 = step(4)  // SMELL-A-2064
value_5 = step(5)  // SMELL-A-2627
value_6 = step(6)  // SMELL-A-3190
value_7 = step(7)  // SMELL-B-0035
value_8 = step(8)  // SMELL-B-0598
value_9 = step(9)  // SMELL-B-1161
value_10 = step(10)  // SMELL-B-1724
value_11 = step(11)  // SMELL-C-0068
value_12 = step(12)  // SMELL-C-0631
value_13 = step(13)  // SMELL-C-1194

// end
