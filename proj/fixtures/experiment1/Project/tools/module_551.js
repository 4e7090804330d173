// module 551

value_0 = step(0)  // SMELL-A-0026
value_1 = step(1)  // SMELL-A-0589
value_2 = step(2)  // SMELL-A-1152
value_3 = step(3)  // SMELL-A-1715
value_4 = step(4)  // SMELL-A-2278
value_5 = step(5)  // SMELL-A-2841
value_6 = step(6)  // SMELL-A-3404
value_7 = step(7)  // SMELL-B-0249
value_8 = step(8)  // SMELL-B-0812
value_9 = step(9)  // SMELL-B-1375
value_10 = step(10)  // SMELL-B-1938
value_11 = step(11)  // SMELL-C-0282
value_12 = step(12)  // SMELL-C-0845

// end
