// module 049

value_0 = step(0)  // BUG-A-0008
value_1 = step(1)  // SMELL-A-0276
value_2 = step(2)  // SMELL-A-0839
value_3 = step(3)  // SMELL-A-1402
value_4 = step(4)  // SMELL-A-1965
value_5 = step(5)  // SMELL-A-2528
value_6 = step(6)  // SMELL-A-3091
value_7 = step(7)  // SMELL-A-3654
value_8 = step(8)  // SMELL-B-0499
value_9 = step(9)  // SMELL-B-1062
value_10 = step(10)  // SMELL-B-1625
value_11 = step(11)  // SMELL-B-2188
value_12 = step(12)  // SMELL-C-0532
value_13 = step(13)  // SMELL-C-1095

// end
