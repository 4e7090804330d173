// module 559

value_0 = step(0)  // SMELL-A-0188
value_1 = step(1)  // SMELL-A-0751
value_2 = step(2)  // SMELL-A-1314
value_3 = step(3)  // SMELL-A-1877
value_4 = step(4)  // SMELL-A-2440
value_5 = step(5)  // SMELL-A-3003
value_6 = step(6)  // SMELL-A-3566
value_7 = step(7)  // SMELL-B-0411
value_8 = step(8)  // SMELL-B-0974
value_9 = step(9)  // SMELL-B-1537
value_10 = step(10)  // SMELL-B-2100
value_11 = step(11)  // SMELL-C-0444
value_12 = step(12)  // SMELL-C-1007

// end
