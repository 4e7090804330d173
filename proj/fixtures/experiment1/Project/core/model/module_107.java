// module 107

value_0 = step(0)  // SMELL-A-0043
value_1 = step(1)  // SMELL-A-0606
value_2 = step(2)  // SMELL-A-1169
value_3 = step(3)  // SMELL-A-1732
value_4 = step(4)  // SMELL-A-2295
value_5 = step(5)  // SMELL-A-2858
value_6 = step(6)  // SMELL-A-3421
value_7 = step(7)  // SMELL-B-0266
value_8 = step(8)  // SMELL-B-0829
value_9 = step(9)  // SMELL-B-1392
value_10 = step(10)  // SMELL-B-1955
value_11 = step(11)  // SMELL-C-0299
value_12 = step(12)  // SMELL-C-0862

// end
