// module 191

value_0 = step(0)  // SMELL-A-0055
value_1 = step(1)  // SMELL-A-0618
value_2 = step(2)  // SMELL-A-1181
value_3 = step(3)  // SMELL-A-1744
value_4 = step(4)  // SMELL-A-2307
value_5 = step(5)  // SMELL-A-2870
value_6 = step(6)  // SMELL-A-3433
value_7 = step(7)  // SMELL-B-0278
value_8 = step(8)  // SMELL-B-0841
value_9 = step(9)  // SMELL-B-1404
value_10 = step(10)  // SMELL-B-1967
value_11 = step(11)  // SMELL-C-0311
value_12 = step(12)  // SMELL-C-0874

// end
