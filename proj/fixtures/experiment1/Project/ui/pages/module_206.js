// module 206

value_0 = step(0)  // SMELL-A-0218
value_1 = step(1)  // SMELL-A-0781
value_2 = step(2)  // SMELL-A-1344
value_3 = step(3)  // SMELL-A-1907
value_4 = step(4)  // SMELL-A-2470
value_5 = step(5)  // SMELL-A-3033
value_6 = step(6)  // SMELL-A-3596
value_7 = step(7)  // SMELL-B-0441
value_8 = step(8)  // SMELL-B-1004
value_9 = step(9)  // SMELL-B-1567
value_10 = step(10)  // SMELL-B-2130
value_11 = step(11)  // SMELL-C-0474
value_12 = step(12)  // SMELL-C-1037

// end
