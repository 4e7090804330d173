// module 462

value_0 = step(0)  // BUG-A-0067
value_1 = step(1)  // SMELL-A-0335
value_2 = step(2)  // SMELL-A-0898
value_3 = step(3)  // SMELL-A-1461
value_4 = step(4)  // SMELL-A-2024
value_5 = step(5)  // SMELL-A-2587
value_6 = step(6)  // SMELL-A-3150
value_7 = step(7)  // SMELL-A-3713
value_8 = step(8)  // SMELL-B-0558
value_9 = step(9)  // SMELL-B-1121
value_10 = step(10)  // SMELL-B-1684
value_11 = step(11)  // SMELL-C-0028
value_12 = step(12)  // SMELL-C-0591
value_13 = step(13)  // SMELL-C-1154

// end
