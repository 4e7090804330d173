// module 101

value_0 = step(0)  // SMELL-A-0203
value_1 = step(1)  // SMELL-A-0766
value_2 = step(2)  // SMELL-A-1329
value_3 = step(3)  // SMELL-A-1892
value_4 = step(4)  // SMELL-A-2455
value_5 = step(5)  // SMELL-A-3018
value_6 = step(6)  // SMELL-A-3581
value_7 = step(7)  // SMELL-B-0426
value_8 = step(8)  // SMELL-B-0989
value_9 = step(9)  // SMELL-B-1552
value_10 = step(10)  // SMELL-B-2115
value_11 = step(11)  // SMELL-C-0459
value_12 = step(12)  // SMELL-C-1022

// end
