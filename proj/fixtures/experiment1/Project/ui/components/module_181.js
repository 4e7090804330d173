// module 181

value_0 = step(0)  // SMELL-A-0134
value_1 = step(1)  // SMELL-A-0697
value_2 = step(2)  // SMELL-A-1260
value_3 = step(3)  // SMELL-A-1823
value_4 = step(4)  // SMELL-A-2386
value_5 = step(5)  // SMELL-A-2949
value_6 = step(6)  // SMELL-A-3512
value_7 = step(7)  // SMELL-B-0357
value_8 = step(8)  // SMELL-B-0920
value_9 = step(9)  // SMELL-B-1483
value_10 = step(10)  // SMELL-B-2046
value_11 = step(11)  // SMELL-C-0390
value_12 = step(12)  // SMELL-C-0953

// end
