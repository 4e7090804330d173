// module 234

value_0 = step(0)  // SMELL-A-0222
value_1 = step(1)  // SMELL-A-0785
value_2 = step(2)  // SMELL-A-1348
value_3 = step(3)  // SMELL-A-1911
value_4 = step(4)  // SMELL-A-2474
value_5 = step(5)  // SMELL-A-3037
value_6 = step(6)  // SMELL-A-3600
value_7 = step(7)  // SMELL-B-0445
value_8 = step(8)  // SMELL-B-1008
value_9 = step(9)  // SMELL-B-1571
value_10 = step(10)  // SMELL-B-2134
value_11 = step(11)  // SMELL-C-0478
value_12 = step(12)  // SMELL-C-1041

// end
