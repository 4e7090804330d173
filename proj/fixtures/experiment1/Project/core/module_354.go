// module 354

value_0 = step(0)  // BUG-B-0015
value_1 = step(1)  // SMELL-A-0400
value_2 = step(2)  // SMELL-A-0963
value_3 = step(3)  // SMELL-A-1526
value_4 = step(4)  // SMELL-A-2089
value_5 = step(5)  // SMELL-A-2652
value_6 = step(6)  // SMELL-A-3215
value_7 = step(7)  // SMELL-B-0060
value_8 = step(8)  // SMELL-B-0623
value_9 = step(9)  // SMELL-B-1186
value_10 = step(10)  // SMELL-B-1749
value_11 = step(11)  // SMELL-C-0093
value_12 = step(12)  // SMELL-C-0656
value_13 = step(13)  // SMELL-C-1219

// end
