// module 157

value_0 = step(0)  // SMELL-A-0211
value_1 = step(1)  // SMELL-A-0774
value_2 = step(2)  // SMELL-A-1337
value_3 = step(3)  // SMELL-A-1900
value_4 = step(4)  // SMELL-A-2463
value_5 = step(5)  // SMELL-A-3026
value_6 = step(6)  // SMELL-A-3589
value_7 = step(7)  // SMELL-B-0434
value_8 = step(8)  // SMELL-B-0997
value_9 = step(9)  // SMELL-B-1560
value_10 = step(10)  // SMELL-B-2123
value_11 = step(11)  // SMELL-C-0467
value_12 = step(12)  // SMELL-C-1030

// end
