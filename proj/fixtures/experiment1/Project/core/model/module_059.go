// module 059

value_0 = step(0)  // SMELL-A-0197
value_1 = step(1)  // SMELL-A-0760
value_2 = step(2)  // SMELL-A-1323
value_3 = step(3)  // SMELL-A-1886
value_4 = step(4)  // SMELL-A-2449
value_5 = step(5)  // SMELL-A-3012
value_6 = step(6)  // SMELL-A-3575
value_7 = step(7)  // SMELL-B-0420
value_8 = step(8)  // SMELL-B-0983
value_9 = step(9)  // SMELL-B-1546
value_10 = step(10)  // SMELL-B-2109
value_11 = step(11)  // SMELL-C-0453
value_12 = step(12)  // SMELL-C-1016

// end
