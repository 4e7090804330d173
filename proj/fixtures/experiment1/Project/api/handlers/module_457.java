// module 457

value_0 = step(0)  // SMELL-A-0093
value_1 = step(1)  // SMELL-A-0656
value_2 = step(2)  // SMELL-A-1219
value_3 = step(3)  // SMELL-A-1782
value_4 = step(4)  // SMELL-A-2345
value_5 = step(5)  // SMELL-A-2908
value_6 = step(6)  // SMELL-A-3471
value_7 = step(7)  // SMELL-B-0316
value_8 = step(8)  // SMELL-B-0879
value_9 = step(9)  // SMELL-B-1442
value_10 = step(10)  // SMELL-B-2005
value_11 = step(11)  // SMELL-C-0349
value_12 = step(12)  // SMELL-C-0912

// end
