// module 456

value_0 = step(0)  // BUG-B-0110
value_1 = step(1)  // SMELL-A-0495
value_2 = step(2)  // SMELL-A-1058
value_3 = step(3)  // SMELL-A-1621
value_4 = step(4)  // SMELL-A-2184
value_5 = step(5)  // SMELL-A-2747
value_6 = step(6)  // SMELL-A-3310
value_7 = step(7)  // SMELL-B-0155
value_8 = step(8)  // SMELL-B-0718
value_9 = step(9)  // SMELL-B-1281
value_10 = step(10)  // SMELL-B-1844
value_11 = step(11)  // SMELL-C-0188
value_12 = step(12)  // SMELL-C-0751
value_13 = step(13)  // SMELL-C-1314

// end
