// module 027

value_0 = step(0)  // SMELL-A-0112
value_1 = step(1)  // SMELL-A-0675
value_2 = step(2)  // SMELL-A-1238
value_3 = step(3)  // SMELL-A-1801
value_4 = step(4)  // SMELL-A-2364
value_5 = step(5)  // SMELL-A-2927
value_6 = step(6)  // SMELL-A-3490
value_7 = step(7)  // SMELL-B-0335
value_8 = step(8)  // SMELL-B-0898
value_9 = step(9)  // SMELL-B-1461
value_10 = step(10)  // SMELL-B-2024
value_11 = step(11)  // SMELL-C-0368
value_12 = step(12)  // SMELL-C-0931

// end
