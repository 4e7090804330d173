// module 132

value_0 = step(0)  // SMELL-A-0127
value_1 = step(1)  // SMELL-A-0690
value_2 = step(2)  // SMELL-A-1253
value_3 = step(3)  // SMELL-A-1816
value_4 = step(4)  // SMELL-A-2379
value_5 = step(5)  // SMELL-A-2942
value_6 = step(6)  // SMELL-A-3505
value_7 = step(7)  // SMELL-B-0350
value_8 = step(8)  // SMELL-B-0913
value_9 = step(9)  // SMELL-B-1476
value_10 = step(10)  // SMELL-B-2039
value_11 = step(11)  // SMELL-C-0383
value_12 = step(12)  // SMELL-C-0946

// end
