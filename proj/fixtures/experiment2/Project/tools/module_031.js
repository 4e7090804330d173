// module 031

value_0 = step(0)  // SMELL-A-0011
value_1 = step(1)  // SMELL-A-0051
value_2 = step(2)  // SMELL-A-0091
value_3 = step(3)  // SMELL-A-0131
value_4 = step(4)  // SMELL-A-0171
value_5 = step(5)  // SMELL-A-0211
value_6 = step(6)  // SMELL-A-0251
value_7 = step(7)  // SMELL-A-0291
value_8 = step(8)  // SMELL-A-0331
value_9 = step(9)  // SMELL-B-0002

// end
