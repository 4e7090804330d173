// module 427

value_0 = step(0)  // BUG-A-0062
value_1 = step(1)  // SMELL-A-0330
value_2 = step(2)  // SMELL-A-0893
value_3 = step(3)  // SMELL-A-1456
value_4 = step(4)  // SMELL-A-2019
value_5 = step(5)  // SMELL-A-2582
value_6 = step(6)  // SMELL-A-3145
value_7 = step(7)  // SMELL-A-3708
value_8 = step(8)  // SMELL-B-0553
value_9 = step(9)  // SMELL-B-1116
value_10 = step(10)  // SMELL-B-1679
value_11 = step(11)  // SMELL-C-0023
value_12 = step(12)  // SMELL-C-0586
value_13 = step(13)  // SMELL-C-1149

// end
