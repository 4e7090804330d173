// module 156

value_0 = step(0)  // SMELL-A-0050
value_1 = step(1)  // SMELL-A-0613
value_2 = step(2)  // SMELL-A-1176
value_3 = step(3)  // SMELL-A-1739
value_4 = step(4)  // SMELL-A-2302
value_5 = step(5)  // SMELL-A-2865
value_6 = step(6)  // SMELL-A-3428
value_7 = step(7)  // SMELL-B-0273
value_8 = step(8)  // SMELL-B-0836
value_9 = step(9)  // SMELL-B-1399
value_10 = step(10)  // SMELL-B-1962
value_11 = step(11)  // SMELL-C-0306
value_12 = step(12)  // SMELL-C-0869

// end
