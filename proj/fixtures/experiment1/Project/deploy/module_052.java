// module 052

value_0 = step(0)  // SMELL-A-0196
value_1 = step(1)  // SMELL-A-0759
value_2 = step(2)  // SMELL-A-1322
value_3 = step(3)  // SMELL-A-1885
value_4 = step(4)  // SMELL-A-2448
value_5 = step(5)  // SMELL-A-3011
value_6 = step(6)  // SMELL-A-3574
value_7 = step(7)  // SMELL-B-0419
value_8 = step(8)  // SMELL-B-0982
value_9 = step(9)  // SMELL-B-1545
value_10 = step(10)  // SMELL-B-2108
value_11 = step(11)  // SMELL-C-0452
value_12 = step(12)  // SMELL-C-1015

// end
