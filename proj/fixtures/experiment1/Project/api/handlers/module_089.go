// module 089

value_0 = step(0)  // VULN-A-0021
value_1 = step(1)  // SMELL-A-0523
value_2 = step(2)  // SMELL-A-1086
value_3 = step(3)  // SMELL-A-1649
value_4 = step(4)  // SMELL-A-2212
value_5 = step(5)  // SMELL-A-2775
value_6 = step(6)  // SMELL-A-3338
value_7 = step(7)  // SMELL-B-0183
value_8 = step(8)  // SMELL-B-0746
value_9 = step(9)  // SMELL-B-1309
value_10 = step(10)  // SMELL-B-1872
value_11 = step(11)  // SMELL-C-0216
value_12 = step(12)  // SMELL-C-0779
value_13 = step(13)  // SMELL-C-1342

// end
