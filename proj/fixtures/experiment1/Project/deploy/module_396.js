// module 396

value_0 = step(0)  // BUG-B-0021
value_1 = step(1)  // SMELL-A-0406
value_2 = step(2)  // SMELL-A-0969
value_3 = step(3)  // SMELL-A-1532
value_4 = step(4)  // SMELL-A-2095
value_5 = step(5)  // SMELL-A-2658
value_6 = step(6)  // SMELL-A-3221
value_7 = step(7)  // SMELL-B-0066
value_8 = step(8)  // SMELL-B-0629
value_9 = step(9)  // SMELL-B-1192
value_10 = step(10)  // SMELL-B-1755
value_11 = step(11)  // SMELL-C-0099
value_12 = step(12)  // SMELL-C-0662
value_13 = step(13)  // SMELL-C-1225

// end
