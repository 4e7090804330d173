// module 432

value_0 = step(0)  // SMELL-A-0009
value_1 = step(1)  // SMELL-A-0572
value_2 = step(2)  // SMELL-A-1135
value_3 = step(3)  // SMELL-A-1698
value_4 = step(4)  // SMELL-A-2261
value_5 = step(5)  // SMELL-A-2824
value_6 = step(6)  // SMELL-A-3387
value_7 = step(7)  // SMELL-B-0232
value_8 = step(8)  // SMELL-B-0795
value_9 = step(9)  // SMELL-B-1358
value_10 = step(10)  // SMELL-B-1921
value_11 = step(11)  // SMELL-C-0265
value_12 = step(12)  // SMELL-C-0828

// end
