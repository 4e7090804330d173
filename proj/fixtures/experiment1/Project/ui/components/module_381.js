// module 381

value_0 = step(0)  // SMELL-A-0243
value_1 = step(1)  // SMELL-A-0806
value_2 = step(2)  // SMELL-A-1369
value_3 = step(3)  // SMELL-A-1932
value_4 = step(4)  // SMELL-A-2495
value_5 = step(5)  // SMELL-A-3058
value_6 = step(6)  // SMELL-A-3621
value_7 = step(7)  // SMELL-B-0466
value_8 = step(8)  // SMELL-B-1029
value_9 = step(9)  // SMELL-B-1592
value_10 = step(10)  // SMELL-B-2155
value_11 = step(11)  // SMELL-C-0499
value_12 = step(12)  // SMELL-C-1062

// end
