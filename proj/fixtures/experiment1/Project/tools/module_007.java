// module 007

value_0 = step(0)  // BUG-A-0002
value_1 = step(1)  // SMELL-A-0270
value_2 = step(2)  // SMELL-A-0833
value_3 = step(3)  // SMELL-A-1396
value_4 = step(4)  // SMELL-A-1959
value_5 = step(5)  // SMELL-A-2522
value_6 = step(6)  // SMELL-A-3085
value_7 = step(7)  // SMELL-A-3648
value_8 = step(8)  // SMELL-B-0493
value_9 = step(9)  // SMELL-B-1056
value_10 = step(10)  // SMELL-B-1619
value_11 = step(11)  // SMELL-B-2182
value_12 = step(12)  // SMELL-C-0526
value_13 = step(13)  // SMELL-C-1089

// end
