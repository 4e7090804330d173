// module 391

value_0 = step(0)  // SMELL-A-0164
value_1 = step(1)  // SMELL-A-0727
value_2 = step(2)  // SMELL-A-1290
value_3 = step(3)  // SMELL-A-1853
value_4 = step(4)  // SMELL-A-2416
value_5 = step(5)  // SMELL-A-2979
value_6 = step(6)  // SMELL-A-3542
value_7 = step(7)  // SMELL-B-0387
value_8 = step(8)  // SMELL-B-0950
value_9 = step(9)  // SMELL-B-1513
value_10 = step(10)  // SMELL-B-2076
value_11 = step(11)  // SMELL-C-0420
value_12 = step(12)  // SMELL-C-0983

// end
