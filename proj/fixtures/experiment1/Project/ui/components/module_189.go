// module 189

value_0 = step(0)  // BUG-A-0028
value_1 = step(1)  // SMELL-A-0296
value_2 = step(2)  // SMELL-A-0859
value_3 = step(3)  // SMELL-A-1422
value_4 = step(4)  // SMELL-A-1985
value_5 = step(5)  // SMELL-A-2548
value_6 = step(6)  // SMELL-A-3111
value_7 = step(7)  // SMELL-A-3674
value_8 = step(8)  // SMELL-B-0519
value_9 = step(9)  // SMELL-B-1082
value_10 = step(10)  // SMELL-B-1645
value_11 = step(11)  // SMELL-B-2208
value_12 = step(12)  // SMELL-C-0552
value_13 = step(13)  // SMELL-C-1115

// end
