// module 102

value_0 = step(0)  // BUG-A-0096
value_1 = step(1)  // SMELL-A-0364
value_2 = step(2)  // SMELL-A-0927
value_3 = step(3)  // SMELL-A-1490
value_4 = step(4)  // SMELL-A-2053
value_5 = step(5)  // SMELL-A-2616
value_6 = step(6)  // SMELL-A-3179
value_7 = step(7)  // SMELL-B-0024
value_8 = step(8)  // SMELL-B-0587
value_9 = step(9)  // SMELL-B-1150
value_10 = step(10)  // SMELL-B-1713
value_11 = step(11)  // SMELL-C-0057
value_12 = step(12)  // SMELL-C-0620
value_13 = step(13)  // SMELL-C-1183

// end
