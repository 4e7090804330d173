// module 429

value_0 = step(0)  // SMELL-A-0089
value_1 = step(1)  // SMELL-A-0652
value_2 = step(2)  // SMELL-A-1215
value_3 = step(3)  // SMELL-A-1778
value_4 = step(4)  // SMELL-A-2341
value_5 = step(5)  // SMELL-A-2904
value_6 = step(6)  // SMELL-A-3467
value_7 = step(7)  // SMELL-B-0312
value_8 = step(8)  // SMELL-B-0875
value_9 = step(9)  // SMELL-B-1438
value_10 = step(10)  // SMELL-B-2001
value_11 = step(11)  // SMELL-C-0345
value_12 = step(12)  // SMELL-C-0908

// end
