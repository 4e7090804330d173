// module 062

value_0 = step(0)  // SMELL-A-0117
value_1 = step(1)  // SMELL-A-0680
value_2 = step(2)  // SMELL-A-1243
value_3 = step(3)  // SMELL-A-1806
value_4 = step(4)  // SMELL-A-2369
value_5 = step(5)  // SMELL-A-2932
value_6 = step(6)  // SMELL-A-3495
value_7 = step(7)  // SMELL-B-0340
value_8 = step(8)  // SMELL-B-0903
value_9 = step(9)  // SMELL-B-1466
value_10 = step(10)  // SMELL-B-2029
value_11 = step(11)  // SMELL-C-0373
value_12 = step(12)  // SMELL-C-0936

// end
