// module 229

value_0 = step(0)  // VULN-A-0041
value_1 = step(1)  // SMELL-A-0543
value_2 = step(2)  // SMELL-A-1106
value_3 = step(3)  // SMELL-A-1669
value_4 = step(4)  // SMELL-A-2232
value_5 = step(5)  // SMELL-A-2795
value_6 = step(6)  // SMELL-A-3358
value_7 = step(7)  // SMELL-B-0203
value_8 = step(8)  // SMELL-B-0766
value_9 = step(9)  // SMELL-B-1329
value_10 = step(10)  // SMELL-B-1892
value_11 = step(11)  // SMELL-C-0236
value_12 = step(12)  // SMELL-C-0799
value_13 = step(13)  // SMELL-C-1362

// end
