// module 407

value_0 = step(0)  // BUG-B-0103
value_1 = step(1)  // SMELL-A-0488
value_2 = step(2)  // SMELL-A-1051
value_3 = step(3)  // SMELL-A-1614
value_4 = step(4)  // SMELL-A-2177
value_5 = step(5)  // SMELL-A-2740
value_6 = step(6)  // SMELL-A-3303
value_7 = step(7)  // SMELL-B-0148
value_8 = step(8)  // SMELL-B-0711
value_9 = step(9)  // SMELL-B-1274
value_10 = step(10)  // SMELL-B-1837
value_11 = step(11)  // SMELL-C-0181
value_12 = step(12)  // SMELL-C-0744
value_13 = step(13)  // SMELL-C-1307

// end
