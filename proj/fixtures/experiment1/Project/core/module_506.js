// module 506

value_0 = step(0)  // SMELL-A-0100
value_1 = step(1)  // SMELL-A-0663
value_2 = step(2)  // SMELL-A-1226
value_3 = step(3)  // SMELL-A-1789
value_4 = step(4)  // SMELL-A-2352
value_5 = step(5)  // SMELL-A-2915
value_6 = step(6)  // SMELL-A-3478
value_7 = step(7)  // SMELL-B-0323
value_8 = step(8)  // SMELL-B-0886
value_9 = step(9)  // SMELL-B-1449
value_10 = step(10)  // SMELL-B-2012
value_11 = step(11)  // SMELL-C-0356
value_12 = step(12)  // SMELL-C-0919

// end
