// module 527

value_0 = step(0)  // SMELL-A-0103
value_1 = step(1)  // SMELL-A-0666
value_2 = step(2)  // SMELL-A-1229
value_3 = step(3)  // SMELL-A-1792
value_4 = step(4)  // SMELL-A-2355
value_5 = step(5)  // SMELL-A-2918
value_6 = step(6)  // SMELL-A-3481
value_7 = step(7)  // SMELL-B-0326
value_8 = step(8)  // SMELL-B-0889
value_9 = step(9)  // SMELL-B-1452
value_10 = step(10)  // SMELL-B-2015
value_11 = step(11)  // SMELL-C-0359
value_12 = step(12)  // SMELL-C-0922

// end
