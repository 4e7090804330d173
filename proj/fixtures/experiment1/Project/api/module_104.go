// module 104

value_0 = step(0)  // SMELL-A-0123
value_1 = step(1)  // SMELL-A-0686
value_2 = step(2)  // SMELL-A-1249
value_3 = step(3)  // SMELL-A-1812
value_4 = step(4)  // SMELL-A-2375
value_5 = step(5)  // SMELL-A-2938
value_6 = step(6)  // SMELL-A-3501
value_7 = step(7)  // SMELL-B-0346
value_8 = step(8)  // SMELL-B-0909
value_9 = step(9)  // SMELL-B-1472
value_10 = step(10)  // SMELL-B-2035
value_11 = step(11)  // SMELL-C-0379
value_12 = step(12)  // SMELL-C-0942

// end
