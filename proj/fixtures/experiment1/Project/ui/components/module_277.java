// module 277

value_0 = step(0)  // BUG-B-0004
value_1 = step(1)  // SMELL-A-0389
value_2 = step(2)  // SMELL-A-0952
value_3 = step(3)  // SMELL-A-1515
value_4 = step(4)  // SMELL-A-2078
value_5 = step(5)  // SMELL-A-2641
value_6 = step(6)  // SMELL-A-3204
value_7 = step(7)  // SMELL-B-0049
value_8 = step(8)  // SMELL-B-0612
value_9 = step(9)  // SMELL-B-1175
value_10 = step(10)  // SMELL-B-1738
value_11 = step(11)  // SMELL-C-0082
value_12 = step(12)  // SMELL-C-0645
value_13 = step(13)  // SMELL-C-1208

// end
