// module 044

value_0 = step(0)  // SMELL-A-0034
value_1 = step(1)  // SMELL-A-0597
value_2 = step(2)  // SMELL-A-1160
value_3 = step(3)  // SMELL-A-1723
value_4 = step(4)  // SMELL-A-2286
value_5 = step(5)  // SMELL-A-2849
value_6 = step(6)  // SMELL-A-3412
value_7 = step(7)  // SMELL-B-0257
value_8 = step(8)  // SMELL-B-0820
value_9 = step(9)  // SMELL-B-1383
value_10 = step(10)  // SMELL-B-1946
value_11 = step(11)  // SMELL-C-0290
value_12 = step(12)  // SMELL-C-0853

// end
