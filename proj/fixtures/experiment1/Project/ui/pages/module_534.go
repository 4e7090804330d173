// module 534

value_0 = step(0)  // SMELL-A-0104
value_1 = step(1)  // SMELL-A-0667
value_2 = step(2)  // SMELL-A-1230
value_3 = step(3)  // SMELL-A-1793
value_4 = step(4)  // SMELL-A-2356
value_5 = step(5)  // SMELL-A-2919
value_6 = step(6)  // SMELL-A-3482
value_7 = step(7)  // SMELL-B-0327
value_8 = step(8)  // SMELL-B-0890
value_9 = step(9)  // SMELL-B-1453
value_10 = step(10)  // SMELL-B-2016
value_11 = step(11)  // SMELL-C-0360
value_12 = step(12)  // SMELL-C-0923

// end
