// module 116

value_0 = step(0)  // BUG-A-0098
value_1 = step(1)  // SMELL-A-0366
value_2 = step(2)  // SMELL-A-0929
value_3 = step(3)  // SMELL-A-1492
value_4 = step(4)  // SMELL-A-2055
value_5 = step(5)  // SMELL-A-2618
value_6 = step(6)  // SMELL-A-3181
value_7 = step(7)  // SMELL-B-0026
value_8 = step(8)  // SMELL-B-0589
value_9 = step(9)  // SMELL-B-1152
value_10 = step(10)  // SMELL-B-1715
value_11 = step(11)  // SMELL-C-0059
value_12 = step(12)  // SMELL-C-0622
value_13 = step(13)  // SMELL-C-1185

// end
