// module 307

value_0 = step(0)  // SMELL-A-0152
value_1 = step(1)  // SMELL-A-0715
value_2 = step(2)  // SMELL-A-1278
value_3 = step(3)  // SMELL-A-1841
value_4 = step(4)  // SMELL-A-2404
value_5 = step(5)  // SMELL-A-2967
value_6 = step(6)  // SMELL-A-3530
value_7 = step(7)  // SMELL-B-0375
value_8 = step(8)  // SMELL-B-0938
value_9 = step(9)  // SMELL-B-1501
value_10 = step(10)  // SMELL-B-2064
value_11 = step(11)  // SMELL-C-0408
value_12 = step(12)  // SMELL-C-0971

// end
