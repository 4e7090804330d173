// module 382

value_0 = step(0)  // BUG-B-0019
value_1 = step(1)  // SMELL-A-0404
value_2 = step(2)  // SMELL-A-0967
value_3 = step(3)  // SMELL-A-1530
value_4 = step(4)  // SMELL-A-2093
value_5 = step(5)  // SMELL-A-2656
value_6 = step(6)  // SMELL-A-3219
value_7 = step(7)  // SMELL-B-0064
value_8 = step(8)  // SMELL-B-0627
value_9 = step(9)  // SMELL-B-1190
value_10 = step(10)  // SMELL-B-1753
value_11 = step(11)  // SMELL-C-0097
value_12 = step(12)  // SMELL-C-0660
value_13 = step(13)  // SMELL-C-1223

// end
