// module 256

value_0 = step(0)  // BUG-B-0001
value_1 = step(1)  // SMELL-A-0386
value_2 = step(2)  // SMELL-A-0949
value_3 = step(3)  // SMELL-A-1512
value_4 = step(4)  // SMELL-A-2075
value_5 = step(5)  // SMELL-A-2638
value_6 = step(6)  // SMELL-A-3201
value_7 = step(7)  // SMELL-B-0046
value_8 = step(8)  // SMELL-B-0609
value_9 = step(9)  // SMELL-B-1172
value_10 = step(10)  // SMELL-B-1735
value_11 = step(11)  // SMELL-C-0079
value_12 = step(12)  // SMELL-C-0642
value_13 = step(13)  // SMELL-C-1205

// end
