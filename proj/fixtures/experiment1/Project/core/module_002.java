// module 002

value_0 = step(0)  // SMELL-A-0028
value_1 = step(1)  // SMELL-A-0591
value_2 = step(2)  // SMELL-A-1154
value_3 = step(3)  // SMELL-A-1717
value_4 = step(4)  // SMELL-A-2280
value_5 = step(5)  // SMELL-A-2843
value_6 = step(6)  // SMELL-A-3406
value_7 = step(7)  // SMELL-B-0251
value_8 = step(8)  // SMELL-B-0814
value_9 = step(9)  // SMELL-B-1377
value_10 = step(10)  // SMELL-B-1940
value_11 = step(11)  // SMELL-C-0284
value_12 = step(12)  // SMELL-C-0847

// end
