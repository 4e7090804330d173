// module 001

value_0 = step(0)  // BUG-B-0045
value_1 = step(1)  // SMELL-A-0430
value_2 = step(2)  // SMELL-A-0993
value_3 = step(3)  // SMELL-A-1556
value_4 = step(4)  // SMELL-A-2119
value_5 = step(5)  // SMELL-A-2682
value_6 = step(6)  // SMELL-A-3245
value_7 = step(7)  // SMELL-B-0090
value_8 = step(8)  // SMELL-B-0653
value_9 = step(9)  // SMELL-B-1216
value_10 = step(10)  // SMELL-B-1779
value_11 = step(11)  // SMELL-C-0123
value_12 = step(12)  // SMELL-C-0686
value_13 = step(13)  // SMELL-C-1249

// end
