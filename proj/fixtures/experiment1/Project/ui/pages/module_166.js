// module 166

value_0 = step(0)  // VULN-A-0032
value_1 = step(1)  // SMELL-A-0534
value_2 = step(2)  // SMELL-A-1097
value_3 = step(3)  // SMELL-A-1660
value_4 = step(4)  // SMELL-A-2223
value_5 = step(5)  // SMELL-A-2786
value_6 = step(6)  // SMELL-A-3349
value_7 = step(7)  // SMELL-B-0194
value_8 = step(8)  // SMELL-B-0757
value_9 = step(9)  // SMELL-B-1320
value_10 = step(10)  // SMELL-B-1883
value_11 = step(11)  // SMELL-C-0227
value_12 = step(12)  // SMELL-C-0790
value_13 = step(13)  // SMELL-C-1353

// end
