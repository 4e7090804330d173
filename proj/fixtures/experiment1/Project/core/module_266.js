// module 266

value_0 = step(0)  // BUG-A-0039
value_1 = step(1)  // SMELL-A-0307
value_2 = step(2)  // SMELL-A-0870
value_3 = step(3)  // SMELL-A-1433
value_4 = step(4)  // SMELL-A-1996
value_5 = step(5)  // SMELL-A-2559
value_6 = step(6)  // SMELL-A-3122
value_7 = step(7)  // SMELL-A-3685
value_8 = step(8)  // SMELL-B-0530
value_9 = step(9)  // SMELL-B-1093
value_10 = step(10)  // SMELL-B-1656
value_11 = step(11)  // SMELL-B-2219
value_12 = step(12)  // SMELL-C-0563
value_13 = step(13)  // SMELL-C-1126

// end
