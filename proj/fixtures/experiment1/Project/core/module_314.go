// module 314

value_0 = step(0)  // SMELL-A-0153
value_1 = step(1)  // SMELL-A-0716
value_2 = step(2)  // SMELL-A-1279
value_3 = step(3)  // SMELL-A-1842
value_4 = step(4)  // SMELL-A-2405
value_5 = step(5)  // SMELL-A-2968
value_6 = step(6)  // SMELL-A-3531
value_7 = step(7)  // SMELL-B-0376
value_8 = step(8)  // SMELL-B-0939
value_9 = step(9)  // SMELL-B-1502
value_10 = step(10)  // SMELL-B-2065
value_11 = step(11)  // SMELL-C-0409
value_12 = step(12)  // SMELL-C-0972

// end
