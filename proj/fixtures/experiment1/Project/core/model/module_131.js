// module 131

value_0 = step(0)  // VULN-A-0027
value_1 = step(1)  // SMELL-A-0529
value_2 = step(2)  // SMELL-A-1092
value_3 = step(3)  // SMELL-A-1655
value_4 = step(4)  // SMELL-A-2218
value_5 = step(5)  // SMELL-A-2781
value_6 = step(6)  // SMELL-A-3344
value_7 = step(7)  // SMELL-B-0189
value_8 = step(8)  // SMELL-B-0752
value_9 = step(9)  // SMELL-B-1315
value_10 = step(10)  // SMELL-B-1878
value_11 = step(11)  // SMELL-C-0222
value_12 = step(12)  // SMELL-C-0785
value_13 = step(13)  // SMELL-C-1348

// end
