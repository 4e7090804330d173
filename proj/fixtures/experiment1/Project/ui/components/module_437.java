// module 437

value_0 = step(0)  // SMELL-A-0251
value_1 = step(1)  // SMELL-A-0814
value_2 = step(2)  // SMELL-A-1377
value_3 = step(3)  // SMELL-A-1940
value_4 = step(4)  // SMELL-A-2503
value_5 = step(5)  // SMELL-A-3066
value_6 = step(6)  // SMELL-A-3629
value_7 = step(7)  // SMELL-B-0474
value_8 = step(8)  // SMELL-B-1037
value_9 = step(9)  // SMELL-B-1600
value_10 = step(10)  // SMELL-B-2163
value_11 = step(11)  // SMELL-C-0507
value_12 = step(12)  // SMELL-C-1070

// end
