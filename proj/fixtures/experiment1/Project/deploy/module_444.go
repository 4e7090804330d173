// module 444

value_0 = step(0)  // SMELL-A-0252
value_1 = step(1)  // SMELL-A-0815
value_2 = step(2)  // SMELL-A-1378
value_3 = step(3)  // SMELL-A-1941
value_4 = step(4)  // SMELL-A-2504
value_5 = step(5)  // SMELL-A-3067
value_6 = step(6)  // SMELL-A-3630
value_7 = step(7)  // SMELL-B-0475
value_8 = step(8)  // SMELL-B-1038
value_9 = step(9)  // SMELL-B-1601
value_10 = step(10)  // SMELL-B-2164
value_11 = step(11)  // SMELL-C-0508
value_12 = step(12)  // SMELL-C-1071

// end
