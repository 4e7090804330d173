// module 321

value_0 = step(0)  // SMELL-A-0154
value_1 = step(1)  // SMELL-A-0717
value_2 = step(2)  // SMELL-A-1280
value_3 = step(3)  // SMELL-A-1843
value_4 = step(4)  // SMELL-A-2406
value_5 = step(5)  // SMELL-A-2969
value_6 = step(6)  // SMELL-A-3532
value_7 = step(7)  // SMELL-B-0377
value_8 = step(8)  // SMELL-B-0940
value_9 = step(9)  // SMELL-B-1503
value_10 = step(10)  // SMELL-B-2066
value_11 = step(11)  // SMELL-C-0410
value_12 = step(12)  // SMELL-C-0973

// end
