// module 524

value_0 = step(0)  // SMELL-A-0183
value_1 = step(1)  // SMELL-A-0746
value_2 = step(2)  // SMELL-A-1309
value_3 = step(3)  // SMELL-A-1872
value_4 = step(4)  // SMELL-A-2435
value_5 = step(5)  // SMELL-A-2998
value_6 = step(6)  // SMELL-A-3561
value_7 = step(7)  // SMELL-B-0406
value_8 = step(8)  // SMELL-B-0969
value_9 = step(9)  // SMELL-B-1532
value_10 = step(10)  // SMELL-B-2095
value_11 = step(11)  // SMELL-C-0439
value_12 = step(12)  // SMELL-C-1002

// end
