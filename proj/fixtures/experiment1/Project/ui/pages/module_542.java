// module 542

value_0 = step(0)  // SMELL-A-0266
value_1 = step(1)  // SMELL-A-0829
value_2 = step(2)  // SMELL-A-1392
value_3 = step(3)  // SMELL-A-1955
value_4 = step(4)  // SMELL-A-2518
value_5 = step(5)  // SMELL-A-3081
value_6 = step(6)  // SMELL-A-3644
value_7 = step(7)  // SMELL-B-0489
value_8 = step(8)  // SMELL-B-1052
value_9 = step(9)  // SMELL-B-1615
value_10 = step(10)  // SMELL-B-2178
value_11 = step(11)  // SMELL-C-0522
value_12 = step(12)  // SMELL-C-1085

// end
