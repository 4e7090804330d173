// module 004

value_0 = step(0)  // BUG-A-0082
value_1 = step(1)  // SMELL-A-0350
value_2 = step(2)  // SMELL-A-0913
value_3 = step(3)  // SMELL-A-1476
value_4 = step(4)  // SMELL-A-2039
value_5 = step(5)  // SMELL-A-2602
value_6 = step(6)  // SMELL-A-3165
value_7 = step(7)  // SMELL-B-0010
value_8 = step(8)  // SMELL-B-0573
value_9 = step(9)  // SMELL-B-1136
value_10 = step(10)  // SMELL-B-1699
value_11 = step(11)  // SMELL-C-0043
value_12 = step(12)  // SMELL-C-0606
value_13 = step(13)  // SMELL-C-1169

// end
