// module 237

value_0 = step(0)  // SMELL-A-0142
value_1 = step(1)  // SMELL-A-0705
value_2 = step(2)  // SMELL-A-1268
value_3 = step(3)  // SMELL-A-1831
value_4 = step(4)  // SMELL-A-2394
value_5 = step(5)  // SMELL-A-2957
value_6 = step(6)  // SMELL-A-3520
value_7 = step(7)  // SMELL-B-0365
value_8 = step(8)  // SMELL-B-0928
value_9 = step(9)  // SMELL-B-1491
value_10 = step(10)  // SMELL-B-2054
value_11 = step(11)  // SMELL-C-0398
value_12 = step(12)  // SMELL-C-0961

// end
