// module 414

value_0 = step(0)  // BUG-B-0104
value_1 = step(1)  // SMELL-A-0489
value_2 = step(2)  // SMELL-A-1052
value_3 = step(3)  // SMELL-A-1615
value_4 = step(4)  // SMELL-A-2178
value_5 = step(5)  // SMELL-A-2741
value_6 = step(6)  // SMELL-A-3304
value_7 = step(7)  // SMELL-B-0149
value_8 = step(8)  // SMELL-B-0712
value_9 = step(9)  // SMELL-B-1275
value_10 = step(10)  // SMELL-B-1838
value_11 = step(11)  // SMELL-C-0182
value_12 = step(12)  // SMELL-C-0745
value_13 = step(13)  // SMELL-C-1308

// end
