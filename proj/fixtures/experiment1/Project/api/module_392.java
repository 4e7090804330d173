// module 392

value_0 = step(0)  // BUG-A-0057
value_1 = step(1)  // SMELL-A-0325
value_2 = step(2)  // SMELL-A-0888
value_3 = step(3)  // SMELL-A-1451
value_4 = step(4)  // SMELL-A-2014
value_5 = step(5)  // SMELL-A-2577
value_6 = step(6)  // SMELL-A-3140
value_7 = step(7)  // SMELL-A-3703
value_8 = step(8)  // SMELL-B-0548
value_9 = step(9)  // SMELL-B-1111
value_10 = step(10)  // SMELL-B-1674
value_11 = step(11)  // SMELL-C-0018
value_12 = step(12)  // SMELL-C-0581
value_13 = step(13)  // SMELL-C-1144

// end
