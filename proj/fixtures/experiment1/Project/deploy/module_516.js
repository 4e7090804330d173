// module 516

value_0 = step(0)  // SMELL-A-0021
value_1 = step(1)  // SMELL-A-0584
value_2 = step(2)  // SMELL-A-1147
value_3 = step(3)  // SMELL-A-1710
value_4 = step(4)  // SMELL-A-2273
value_5 = step(5)  // SMELL-A-2836
value_6 = step(6)  // SMELL-A-3399
value_7 = step(7)  // SMELL-B-0244
value_8 = step(8)  // SMELL-B-0807
value_9 = step(9)  // SMELL-B-1370
value_10 = step(10)  // SMELL-B-1933
value_11 = step(11)  // SMELL-C-0277
value_12 = step(12)  // SMELL-C-0840

// end
