// module 036

value_0 = step(0)  // BUG-B-0050
value_1 = step(1)  // SMELL-A-0435
value_2 = step(2)  // SMELL-A-0998
value_3 = step(3)  // SMELL-A-1561
value_4 = step(4)  // SMELL-A-2124
value_5 = step(5)  // SMELL-A-2687
value_6 = step(6)  // SMELL-A-3250
value_7 = step(7)  // SMELL-B-0095
value_8 = step(8)  // SMELL-B-0658
value_9 = step(9)  // SMELL-B-1221
value_10 = step(10)  // SMELL-B-1784
value_11 = step(11)  // SMELL-C-0128
value_12 = step(12)  // SMELL-C-0691
value_13 = step(13)  // SMELL-C-1254

// end
