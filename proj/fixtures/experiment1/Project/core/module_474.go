// module 474

value_0 = step(0)  // SMELL-A-0015
value_1 = step(1)  // SMELL-A-0578
value_2 = step(2)  // SMELL-A-1141
value_3 = step(3)  // SMELL-A-1704
value_4 = step(4)  // SMELL-A-2267
value_5 = step(5)  // SMELL-A-2830
value_6 = step(6)  // SMELL-A-3393
value_7 = step(7)  // SMELL-B-0238
value_8 = step(8)  // SMELL-B-0801
value_9 = step(9)  // SMELL-B-1364
value_10 = step(10)  // SMELL-B-1927
value_11 = step(11)  // SMELL-C-0271
value_12 = step(12)  // SMELL-C-0834

// end
