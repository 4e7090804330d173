// module 557

value_0 = step(0)  // BUG-B-0044
value_1 = step(1)  // SMELL-A-0429
value_2 = step(2)  // SMELL-A-0992
value_3 = step(3)  // SMELL-A-1555
value_4 = step(4)  // SMELL-A-2118
value_5 = step(5)  // SMELL-A-2681
value_6 = step(6)  // SMELL-A-3244
value_7 = step(7)  // SMELL-B-0089
value_8 = step(8)  // SMELL-B-0652
value_9 = step(9)  // SMELL-B-1215
value_10 = step(10)  // SMELL-B-1778
value_11 = step(11)  // SMELL-C-0122
value_12 = step(12)  // SMELL-C-0685
value_13 = step(13)  // SMELL-C-1248

// end
