// module 017

value_0 = step(0)  // SMELL-A-0191
value_1 = step(1)  // SMELL-A-0754
value_2 = step(2)  // SMELL-A-1317
value_3 = step(3)  // SMELL-A-1880
value_4 = step(4)  // SMELL-A-2443
value_5 = step(5)  // SMELL-A-3006
value_6 = step(6)  // SMELL-A-3569
value_7 = step(7)  // SMELL-B-0414
value_8 = step(8)  // SMELL-B-0977
value_9 = step(9)  // SMELL-B-1540
value_10 = step(10)  // SMELL-B-2103
value_11 = step(11)  // SMELL-C-0447
value_12 = step(12)  // SMELL-C-1010

// end
