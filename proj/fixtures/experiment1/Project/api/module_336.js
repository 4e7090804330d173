// module 336

value_0 = step(0)  // BUG-A-0049
value_1 = step(1)  // SMELL-A-0317
value_2 = step(2)  // SMELL-A-0880
value_3 = step(3)  // SMELL-A-1443
value_4 = step(4)  // SMELL-A-2006
value_5 = step(5)  // SMELL-A-2569
value_6 = step(6)  // SMELL-A-3132
value_7 = step(7)  // SMELL-A-3695
value_8 = step(8)  // SMELL-B-0540
value_9 = step(9)  // SMELL-B-1103
value_10 = step(10)  // SMELL-B-1666
value_11 = step(11)  // SMELL-C-0010
value_12 = step(12)  // SMELL-C-0573
value_13 = step(13)  // SMELL-C-1136

// end
