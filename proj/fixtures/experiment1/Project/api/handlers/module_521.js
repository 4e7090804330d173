// module 521

value_0 = step(0)  // SMELL-A-0263
value_1 = step(1)  // SMELL-A-0826
value_2 = step(2)  // SMELL-A-1389
value_3 = step(3)  // SMELL-A-1952
value_4 = step(4)  // SMELL-A-2515
value_5 = step(5)  // SMELL-A-3078
value_6 = step(6)  // SMELL-A-3641
value_7 = step(7)  // SMELL-B-0486
value_8 = step(8)  // SMELL-B-1049
value_9 = step(9)  // SMELL-B-1612
value_10 = step(10)  // SMELL-B-2175
value_11 = step(11)  // SMELL-C-0519
value_12 = step(12)  // SMELL-C-1082

// end
