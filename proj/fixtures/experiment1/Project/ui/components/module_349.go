// module 349

value_0 = step(0)  // SMELL-A-0158
value_1 = step(1)  // SMELL-A-0721
value_2 = step(2)  // SMELL-A-1284
value_3 = step(3)  // SMELL-A-1847
value_4 = step(4)  // SMELL-A-2410
value_5 = step(5)  // SMELL-A-2973
value_6 = step(6)  // SMELL-A-3536
value_7 = step(7)  // SMELL-B-0381
value_8 = step(8)  // SMELL-B-0944
value_9 = step(9)  // SMELL-B-1507
value_10 = step(10)  // SMELL-B-2070
value_11 = step(11)  // SMELL-C-0414
value_12 = step(12)  // SMELL-C-0977

// end
