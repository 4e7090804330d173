// module 054

value_0 = step(0)  // VULN-A-0016
value_1 = step(1)  // SMELL-A-0518
value_2 = step(2)  // SMELL-A-1081
value_3 = step(3)  // SMELL-A-1644
value_4 = step(4)  // SMELL-A-2207
value_5 = step(5)  // SMELL-A-2770
value_6 = step(6)  // SMELL-A-3333
value_7 = step(7)  // SMELL-B-0178
value_8 = step(8)  // SMELL-B-0741
value_9 = step(9)  // SMELL-B-1304
value_10 = step(10)  // SMELL-B-1867
value_11 = step(11)  // SMELL-C-0211
value_12 = step(12)  // SMELL-C-0774
value_13 = step(13)  // SMELL-C-1337

// end
