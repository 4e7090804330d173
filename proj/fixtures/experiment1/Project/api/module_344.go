// module 344

value_0 = step(0)  // BUG-B-0094
value_1 = step(1)  // SMELL-A-0479
value_2 = step(2)  // SMELL-A-1042
value_3 = step(3)  // SMELL-A-1605
value_4 = step(4)  // SMELL-A-2168
value_5 = step(5)  // SMELL-A-2731
value_6 = step(6)  // SMELL-A-3294
value_7 = step(7)  // SMELL-B-0139
value_8 = step(8)  // SMELL-B-0702
value_9 = step(9)  // SMELL-B-1265
value_10 = step(10)  // SMELL-B-1828
value_11 = step(11)  // SMELL-C-0172
value_12 = step(12)  // SMELL-C-0735
value_13 = step(13)  // SMELL-C-1298

// end
