// module 311

value_0 = step(0)  // SMELL-A-0233
value_1 = step(1)  // SMELL-A-0796
value_2 = step(2)  // SMELL-A-1359
value_3 = step(3)  // SMELL-A-1922
value_4 = step(4)  // SMELL-A-2485
value_5 = step(5)  // SMELL-A-3048
value_6 = step(6)  // SMELL-A-3611
value_7 = step(7)  // SMELL-B-0456
value_8 = step(8)  // SMELL-B-1019
value_9 = step(9)  // SMELL-B-1582
value_10 = step(10)  // SMELL-B-2145
value_11 = step(11)  // SMELL-C-0489
value_12 = step(12)  // SMELL-C-1052

// end
