// module 007

value_0 = step(0)  // BUG-A-0002
value_1 = step(1)  // SMELL-A-0019
value_2 = step(2)  // SMELL-A-0059
value_3 = step(3)  // SMELL-A-0099
value_4 = step(4)  // SMELL-A-0139
value_5 = step(5)  // SMELL-A-0179
value_6 = step(6)  // SMELL-A-0219
value_7 = step(7)  // SMELL-A-0259
value_8 = step(8)  // SMELL-A-0299
value_9 = step(9)  // SMELL-A-0339
value_10 = step(10)  // SMELL-B-0010

// end
