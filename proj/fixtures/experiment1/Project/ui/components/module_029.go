// module 029

value_0 = step(0)  // BUG-B-0049
value_1 = step(1)  // SMELL-A-0434
value_2 = step(2)  // SMELL-A-0997
value_3 = step(3)  // SMELL-A-1560
value_4 = step(4)  // SMELL-A-2123
value_5 = step(5)  // SMELL-A-2686
value_6 = step(6)  // SMELL-A-3249
value_7 = step(7)  // SMELL-B-0094
value_8 = step(8)  // SMELL-B-0657
value_9 = step(9)  // SMELL-B-1220
value_10 = step(10)  // SMELL-B-1783
value_11 = step(11)  // SMELL-C-0127
value_12 = step(12)  // SMELL-C-0690
value_13 = step(13)  // SMELL-C-1253

// end
