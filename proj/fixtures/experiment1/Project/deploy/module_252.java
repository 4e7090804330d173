// module 252

value_0 = step(0)  // BUG-A-0037
value_1 = step(1)  // SMELL-A-0305
value_2 = step(2)  // SMELL-A-0868
value_3 = step(3)  // SMELL-A-1431
value_4 = step(4)  // SMELL-A-1994
value_5 = step(5)  // SMELL-A-2557
value_6 = step(6)  // SMELL-A-3120
value_7 = step(7)  // SMELL-A-3683
value_8 = step(8)  // SMELL-B-0528
value_9 = step(9)  // SMELL-B-1091
value_10 = step(10)  // SMELL-B-1654
value_11 = step(11)  // SMELL-B-2217
value_12 = step(12)  // SMELL-C-0561
value_13 = step(13)  // SMELL-C-1124

// end
