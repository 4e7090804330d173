// module 352

value_0 = step(0)  // SMELL-A-0078
value_1 = step(1)  // SMELL-A-0641
value_2 = step(2)  // SMELL-A-1204
value_3 = step(3)  // SMELL-A-1767
value_4 = step(4)  // SMELL-A-2330
value_5 = step(5)  // SMELL-A-2893
value_6 = step(6)  // SMELL-A-3456
value_7 = step(7)  // SMELL-B-0301
value_8 = step(8)  // SMELL-B-0864
value_9 = step(9)  // SMELL-B-1427
value_10 = step(10)  // SMELL-B-1990
value_11 = step(11)  // SMELL-C-0334
value_12 = step(12)  // SMELL-C-0897

// end
