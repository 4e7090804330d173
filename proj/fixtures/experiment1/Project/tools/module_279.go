// module 279

value_0 = step(0)  // SMELL-A-0148
value_1 = step(1)  // SMELL-A-0711
value_2 = step(2)  // SMELL-A-1274
value_3 = step(3)  // SMELL-A-1837
value_4 = step(4)  // SMELL-A-2400
value_5 = step(5)  // SMELL-A-2963
value_6 = step(6)  // SMELL-A-3526
value_7 = step(7)  // SMELL-B-0371
value_8 = step(8)  // SMELL-B-0934
value_9 = step(9)  // SMELL-B-1497
value_10 = step(10)  // SMELL-B-2060
value_11 = step(11)  // SMELL-C-0404
value_12 = step(12)  // SMELL-C-0967

// end
