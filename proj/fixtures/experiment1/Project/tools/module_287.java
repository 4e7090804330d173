// module 287

value_0 = step(0)  // BUG-A-0042
value_1 = step(1)  // SMELL-A-0310
value_2 = step(2)  // SMELL-A-0873
value_3 = step(3)  // SMELL-A-1436
value_4 = step(4)  // SMELL-A-1999
value_5 = step(5)  // SMELL-A-2562
value_6 = step(6)  // SMELL-A-3125
value_7 = step(7)  // SMELL-A-3688
value_8 = step(8)  // SMELL-B-0533
value_9 = step(9)  // SMELL-B-1096
value_10 = step(10)  // SMELL-B-1659
value_11 = step(11)  // SMELL-C-0003
value_12 = step(12)  // SMELL-C-0566
value_13 = step(13)  // SMELL-C-1129

// end
