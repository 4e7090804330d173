// module 402

value_0 = step(0)  // SMELL-A-0246
value_1 = step(1)  // SMELL-A-0809
value_2 = step(2)  // SMELL-A-1372
value_3 = step(3)  // SMELL-A-1935
value_4 = step(4)  // SMELL-A-2498
value_5 = step(5)  // SMELL-A-3061
value_6 = step(6)  // SMELL-A-3624
value_7 = step(7)  // SMELL-B-0469
value_8 = step(8)  // SMELL-B-1032
value_9 = step(9)  // SMELL-B-1595
value_10 = step(10)  // SMELL-B-2158
value_11 = step(11)  // SMELL-C-0502
value_12 = step(12)  // SMELL-C-1065

// end
