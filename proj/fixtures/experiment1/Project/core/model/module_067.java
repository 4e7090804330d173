// module 067

value_0 = step(0)  // BUG-A-0091
value_1 = step(1)  // SMELL-A-0359
value_2 = step(2)  // SMELL-A-0922
value_3 = step(3)  // SMELL-A-1485
value_4 = step(4)  // SMELL-A-2048
value_5 = step(5)  // SMELL-A-2611
value_6 = step(6)  // SMELL-A-3174
value_7 = step(7)  // SMELL-B-0019
value_8 = step(8)  // SMELL-B-0582
value_9 = step(9)  // SMELL-B-1145
value_10 = step(10)  // SMELL-B-1708
value_11 = step(11)  // SMELL-C-0052
value_12 = step(12)  // SMELL-C-0615
value_13 = step(13)  // SMELL-C-1178

// end
