// module 482

value_0 = step(0)  // SMELL-A-0177
value_1 = step(1)  // SMELL-A-0740
value_2 = step(2)  // SMELL-A-1303
value_3 = step(3)  // SMELL-A-1866
value_4 = step(4)  // SMELL-A-2429
value_5 = step(5)  // SMELL-A-2992
value_6 = step(6)  // SMELL-A-3555
value_7 = step(7)  // SMELL-B-0400
value_8 = step(8)  // SMELL-B-0963
value_9 = step(9)  // SMELL-B-1526
value_10 = step(10)  // SMELL-B-2089
value_11 = step(11)  // SMELL-C-0433
value_12 = step(12)  // SMELL-C-0996

// end
