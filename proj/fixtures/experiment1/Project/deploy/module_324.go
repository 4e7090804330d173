// module 324

value_0 = step(0)  // SMELL-A-0074
value_1 = step(1)  // SMELL-A-0637
value_2 = step(2)  // SMELL-A-1200
value_3 = step(3)  // SMELL-A-1763
value_4 = step(4)  // SMELL-A-2326
value_5 = step(5)  // SMELL-A-2889
value_6 = step(6)  // SMELL-A-3452
value_7 = step(7)  // SMELL-B-0297
value_8 = step(8)  // SMELL-B-0860
value_9 = step(9)  // SMELL-B-1423
value_10 = step(10)  // SMELL-B-1986
value_11 = step(11)  // SMELL-C-0330
value_12 = step(12)  // SMELL-C-0893

// end
