// module 026

value_0 = step(0)  // VULN-A-0012
value_1 = step(1)  // SMELL-A-0514
value_2 = step(2)  // SMELL-A-1077
value_3 = step(3)  // SMELL-A-1640
value_4 = step(4)  // SMELL-A-2203
value_5 = step(5)  // SMELL-A-2766
value_6 = step(6)  // SMELL-A-3329
value_7 = step(7)  // SMELL-B-0174
value_8 = step(8)  // SMELL-B-0737
value_9 = step(9)  // SMELL-B-1300
value_10 = step(10)  // SMELL-B-1863
value_11 = step(11)  // SMELL-C-0207
value_12 = step(12)  // SMELL-C-0770
value_13 = step(13)  // SMELL-C-1333

// end
