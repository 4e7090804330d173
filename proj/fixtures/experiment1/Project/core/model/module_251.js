// module 251

value_0 = step(0)  // SMELL-A-0144
value_1 = step(1)  // SMELL-A-0707
value_2 = step(2)  // SMELL-A-1270
value_3 = step(3)  // SMELL-A-1833
value_4 = step(4)  // SMELL-A-2396
value_5 = step(5)  // SMELL-A-2959
value_6 = step(6)  // SMELL-A-3522
value_7 = step(7)  // SMELL-B-0367
value_8 = step(8)  // SMELL-B-0930
value_9 = step(9)  // SMELL-B-1493
value_10 = step(10)  // SMELL-B-2056
value_11 = step(11)  // SMELL-C-0400
value_12 = step(12)  // SMELL-C-0963

// end
