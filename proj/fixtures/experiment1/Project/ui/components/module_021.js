// module 021

value_0 = step(0)  // BUG-A-0004
value_1 = step(1)  // SMELL-A-0272
value_2 = step(2)  // SMELL-A-0835
value_3 = step(3)  // SMELL-A-1398
value_4 = step(4)  // SMELL-A-1961
value_5 = step(5)  // SMELL-A-2524
value_6 = step(6)  // SMELL-A-3087
value_7 = step(7)  // SMELL-A-3650
value_8 = step(8)  // SMELL-B-0495
value_9 = step(9)  // SMELL-B-1058
value_10 = step(10)  // SMELL-B-1621
value_11 = step(11)  // SMELL-B-2184
value_12 = step(12)  // SMELL-C-0528
value_13 = step(13)  // SMELL-C-1091

// end
