// module 426

value_0 = step(0)  // SMELL-A-0169
value_1 = step(1)  // SMELL-A-0732
value_2 = step(2)  // SMELL-A-1295
value_3 = step(3)  // SMELL-A-1858
value_4 = step(4)  // SMELL-A-2421
value_5 = step(5)  // SMELL-A-2984
value_6 = step(6)  // SMELL-A-3547
value_7 = step(7)  // SMELL-B-0392
value_8 = step(8)  // SMELL-B-0955
value_9 = step(9)  // SMELL-B-1518
value_10 = step(10)  // SMELL-B-2081
value_11 = step(11)  // SMELL-C-0425
value_12 = step(12)  // SMELL-C-0988

// end
