// module 242

value_0 = step(0)  // BUG-A-0116
value_1 = step(1)  // SMELL-A-0384
value_2 = step(2)  // SMELL-A-0947
value_3 = step(3)  // SMELL-A-1510
value_4 = step(4)  // SMELL-A-2073
value_5 = step(5)  // SMELL-A-2636
value_6 = step(6)  // SMELL-A-3199
value_7 = step(7)  // SMELL-B-0044
value_8 = step(8)  // SMELL-B-0607
value_9 = step(9)  // SMELL-B-1170
value_10 = step(10)  // SMELL-B-1733
value_11 = step(11)  // SMELL-C-0077
value_12 = step(12)  // SMELL-C-0640
value_13 = step(13)  // SMELL-C-1203

// end
