// module 097

value_0 = step(0)  // SMELL-A-0122
value_1 = step(1)  // SMELL-A-0685
value_2 = step(2)  // SMELL-A-1248
value_3 = step(3)  // SMELL-A-1811
value_4 = step(4)  // SMELL-A-2374
value_5 = step(5)  // SMELL-A-2937
value_6 = step(6)  // SMELL-A-3500
value_7 = step(7)  // SMELL-B-0345
value_8 = step(8)  // SMELL-B-0908
value_9 = step(9)  // SMELL-B-1471
value_10 = step(10)  // SMELL-B-2034
value_11 = step(11)  // SMELL-C-0378
value_12 = step(12)  // SMELL-C-0941

// end
