// module 092

value_0 = step(0)  // BUG-B-0058
value_1 = step(1)  // SMELL-A-0443
value_2 = step(2)  // SMELL-A-1006
value_3 = step(3)  // SMELL-A-1569
value_4 = step(4)  // SMELL-A-2132
value_5 = step(5)  // SMELL-A-2695
value_6 = step(6)  // SMELL-A-3258
value_7 = step(7)  // SMELL-B-0103
value_8 = step(8)  // SMELL-B-0666
value_9 = step(9)  // SMELL-B-1229
value_10 = step(10)  // SMELL-B-1792
value_11 = step(11)  // SMELL-C-0136
value_12 = step(12)  // SMELL-C-0699
value_13 = step(13)  // SMELL-C-1262

// end
