// module 467

value_0 = step(0)  // SMELL-A-0014
value_1 = step(1)  // SMELL-A-0577
value_2 = step(2)  // SMELL-A-1140
value_3 = step(3)  // SMELL-A-1703
value_4 = step(4)  // SMELL-A-2266
value_5 = step(5)  // SMELL-A-2829
value_6 = step(6)  // SMELL-A-3392
value_7 = step(7)  // SMELL-B-0237
value_8 = step(8)  // SMELL-B-0800
value_9 = step(9)  // SMELL-B-1363
value_10 = step(10)  // SMELL-B-1926
value_11 = step(11)  // SMELL-C-0270
value_12 = step(12)  // SMELL-C-0833

// end
