// module 532

value_0 = step(0)  // BUG-A-0077
value_1 = step(1)  // SMELL-A-0345
value_2 = step(2)  // SMELL-A-0908
value_3 = step(3)  // SMELL-A-1471
value_4 = step(4)  // SMELL-A-2034
value_5 = step(5)  // SMELL-A-2597
value_6 = step(6)  // SMELL-A-3160
value_7 = step(7)  // SMELL-B-0005
value_8 = step(8)  // SMELL-B-0568
value_9 = step(9)  // SMELL-B-1131
value_10 = step(10)  // SMELL-B-1694
value_11 = step(11)  // SMELL-C-0038
value_12 = step(12)  // SMELL-C-0601
value_13 = step(13)  // SMELL-C-1164

// end
