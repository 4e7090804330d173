// module 537

value_0 = step(0)  // SMELL-A-0024
value_1 = step(1)  // SMELL-A-0587
value_2 = step(2)  // SMELL-A-1150
value_3 = step(3)  // SMELL-A-1713
value_4 = step(4)  // SMELL-A-2276
value_5 = step(5)  // SMELL-A-2839
value_6 = step(6)  // SMELL-A-3402
value_7 = step(7)  // SMELL-B-0247
value_8 = step(8)  // SMELL-B-0810
value_9 = step(9)  // SMELL-B-1373
value_10 = step(10)  // SMELL-B-1936
value_11 = step(11)  // SMELL-C-0280
value_12 = step(12)  // SMELL-C-0843

// end
