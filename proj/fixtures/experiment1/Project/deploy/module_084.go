// module 084

value_0 = step(0)  // BUG-A-0013
value_1 = step(1)  // SMELL-A-0281
value_2 = step(2)  // SMELL-A-0844
value_3 = step(3)  // SMELL-A-1407
value_4 = step(4)  // SMELL-A-1970
value_5 = step(5)  // SMELL-A-2533
value_6 = step(6)  // SMELL-A-3096
value_7 = step(7)  // SMELL-A-3659
value_8 = step(8)  // SMELL-B-0504
value_9 = step(9)  // SMELL-B-1067
value_10 = step(10)  // SMELL-B-1630
value_11 = step(11)  // SMELL-B-2193
value_12 = step(12)  // SMELL-C-0537
value_13 = step(13)  // SMELL-C-1100

// end
