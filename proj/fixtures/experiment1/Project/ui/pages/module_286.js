// module 286

value_0 = step(0)  // SMELL-A-0149
value_1 = step(1)  // SMELL-A-0712
value_2 = step(2)  // SMELL-A-1275
value_3 = step(3)  // SMELL-A-1838
value_4 = step(4)  // SMELL-A-2401
value_5 = step(5)  // SMELL-A-2964
value_6 = step(6)  // SMELL-A-3527
value_7 = step(7)  // SMELL-B-0372
value_8 = step(8)  // SMELL-B-0935
value_9 = step(9)  // SMELL-B-1498
value_10 = step(10)  // SMELL-B-2061
value_11 = step(11)  // SMELL-C-0405
value_12 = step(12)  // SMELL-C-0968

// end
