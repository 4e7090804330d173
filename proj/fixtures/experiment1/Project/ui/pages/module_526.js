// module 526

value_0 = step(0)  // VULN-A-0003
value_1 = step(1)  // SMELL-A-0505
value_2 = step(2)  // SMELL-A-1068
value_3 = step(3)  // SMELL-A-1631
value_4 = step(4)  // SMELL-A-2194
value_5 = step(5)  // SMELL-A-2757
value_6 = step(6)  // SMELL-A-3320
value_7 = step(7)  // SMELL-B-0165
value_8 = step(8)  // SMELL-B-0728
value_9 = step(9)  // SMELL-B-1291
value_10 = step(10)  // SMELL-B-1854
value_11 = step(11)  // SMELL-C-0198
value_12 = step(12)  // SMELL-C-0761
value_13 = step(13)  // SMELL-C-1324

// end
