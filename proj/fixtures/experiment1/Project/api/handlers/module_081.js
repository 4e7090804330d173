// module 081

value_0 = step(0)  // BUG-A-0093
value_1 = step(1)  // SMELL-A-0361
value_2 = step(2)  // SMELL-A-0924
value_3 = step(3)  // SMELL-A-1487
value_4 = step(4)  // SMELL-A-2050
value_5 = step(5)  // SMELL-A-2613
value_6 = step(6)  // SMELL-A-3176
value_7 = step(7)  // SMELL-B-0021
value_8 = step(8)  // SMELL-B-0584
value_9 = step(9)  // SMELL-B-1147
value_10 = step(10)  // SMELL-B-1710
value_11 = step(11)  // SMELL-C-0054
value_12 = step(12)  // SMELL-C-0617
value_13 = step(13)  // SMELL-C-1180

// end
