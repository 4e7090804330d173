// module 261

value_0 = step(0)  // SMELL-A-0065
value_1 = step(1)  // SMELL-A-0628
value_2 = step(2)  // SMELL-A-1191
value_3 = step(3)  // SMELL-A-1754
value_4 = step(4)  // SMELL-A-2317
value_5 = step(5)  // SMELL-A-2880
value_6 = step(6)  // SMELL-A-3443
value_7 = step(7)  // SMELL-B-0288
value_8 = step(8)  // SMELL-B-0851
value_9 = step(9)  // SMELL-B-1414
value_10 = step(10)  // SMELL-B-1977
value_11 = step(11)  // SMELL-C-0321
value_12 = step(12)  // SMELL-C-0884

// end
