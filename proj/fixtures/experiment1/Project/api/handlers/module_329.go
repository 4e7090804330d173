// module 329

value_0 = step(0)  // BUG-A-0048
value_1 = step(1)  // SMELL-A-0316
value_2 = step(2)  // SMELL-A-0879
value_3 = step(3)  // SMELL-A-1442
value_4 = step(4)  // SMELL-A-2005
value_5 = step(5)  // SMELL-A-2568
value_6 = step(6)  // SMELL-A-3131
value_7 = step(7)  // SMELL-A-3694
value_8 = step(8)  // SMELL-B-0539
value_9 = step(9)  // SMELL-B-1102
value_10 = step(10)  // SMELL-B-1665
value_11 = step(11)  // SMELL-C-0009
value_12 = step(12)  // SMELL-C-0572
value_13 = step(13)  // SMELL-C-1135

// end
