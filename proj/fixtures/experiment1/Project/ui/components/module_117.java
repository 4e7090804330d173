// module 117

value_0 = step(0)  // VULN-A-0025
value_1 = step(1)  // SMELL-A-0527
value_2 = step(2)  // SMELL-A-1090
value_3 = step(3)  // SMELL-A-1653
value_4 = step(4)  // SMELL-A-2216
value_5 = step(5)  // SMELL-A-2779
value_6 = step(6)  // SMELL-A-3342
value_7 = step(7)  // SMELL-B-0187
value_8 = step(8)  // SMELL-B-0750
value_9 = step(9)  // SMELL-B-1313
value_10 = step(10)  // SMELL-B-1876
value_11 = step(11)  // SMELL-C-0220
value_12 = step(12)  // SMELL-C-0783
value_13 = step(13)  // SMELL-C-1346

// end
