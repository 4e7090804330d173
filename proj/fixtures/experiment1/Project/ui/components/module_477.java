// module 477

value_0 = step(0)  // BUG-B-0113
value_1 = step(1)  // SMELL-A-0498
value_2 = step(2)  // SMELL-A-1061
value_3 = step(3)  // SMELL-A-1624
value_4 = step(4)  // SMELL-A-2187
value_5 = step(5)  // SMELL-A-2750
value_6 = step(6)  // SMELL-A-3313
value_7 = step(7)  // SMELL-B-0158
value_8 = step(8)  // SMELL-B-0721
value_9 = step(9)  // SMELL-B-1284
value_10 = step(10)  // SMELL-B-1847
value_11 = step(11)  // SMELL-C-0191
value_12 = step(12)  // SMELL-C-0754
value_13 = step(13)  // SMELL-C-1317

// end
