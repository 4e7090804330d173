// module 547

value_0 = step(0)  // VULN-A-0006
value_1 = step(1)  // SMELL-A-0508
value_2 = step(2)  // SMELL-A-1071
value_3 = step(3)  // SMELL-A-1634
value_4 = step(4)  // SMELL-A-2197
value_5 = step(5)  // SMELL-A-2760
value_6 = step(6)  // SMELL-A-3323
value_7 = step(7)  // SMELL-B-0168
value_8 = step(8)  // SMELL-B-0731
value_9 = step(9)  // SMELL-B-1294
value_10 = step(10)  // SMELL-B-1857
value_11 = step(11)  // SMELL-C-0201
value_12 = step(12)  // SMELL-C-0764
value_13 = step(13)  // SMELL-C-1327

// end
