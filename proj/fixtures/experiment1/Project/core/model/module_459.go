// module 459

value_0 = step(0)  // BUG-B-0030
value_1 = step(1)  // SMELL-A-0415
value_2 = step(2)  // SMELL-A-0978
value_3 = step(3)  // SMELL-A-1541
value_4 = step(4)  // SMELL-A-2104
value_5 = step(5)  // SMELL-A-2667
value_6 = step(6)  // SMELL-A-3230
value_7 = step(7)  // SMELL-B-0075
value_8 = step(8)  // SMELL-B-0638
value_9 = step(9)  // SMELL-B-1201
value_10 = step(10)  // SMELL-B-1764
value_11 = step(11)  // SMELL-C-0108
value_12 = step(12)  // SMELL-C-0671
value_13 = step(13)  // SMELL-C-1234

// end
