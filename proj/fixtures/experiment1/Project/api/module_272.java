// module 272

value_0 = step(0)  // SMELL-A-0147
value_1 = step(1)  // SMELL-A-0710
value_2 = step(2)  // SMELL-A-1273
value_3 = step(3)  // SMELL-A-1836
value_4 = step(4)  // SMELL-A-2399
value_5 = step(5)  // SMELL-A-2962
value_6 = step(6)  // SMELL-A-3525
value_7 = step(7)  // SMELL-B-0370
value_8 = step(8)  // SMELL-B-0933
value_9 = step(9)  // SMELL-B-1496
value_10 = step(10)  // SMELL-B-2059
value_11 = step(11)  // SMELL-C-0403
value_12 = step(12)  // SMELL-C-0966

// end
