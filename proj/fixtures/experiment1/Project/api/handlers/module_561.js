// module 561

value_0 = step(0)  // VULN-A-0008
value_1 = step(1)  // SMELL-A-0510
value_2 = step(2)  // SMELL-A-1073
value_3 = step(3)  // SMELL-A-1636
value_4 = step(4)  // SMELL-A-2199
value_5 = step(5)  // SMELL-A-2762
value_6 = step(6)  // SMELL-A-3325
value_7 = step(7)  // SMELL-B-0170
value_8 = step(8)  // SMELL-B-0733
value_9 = step(9)  // SMELL-B-1296
value_10 = step(10)  // SMELL-B-1859
value_11 = step(11)  // SMELL-C-0203
value_12 = step(12)  // SMELL-C-0766
value_13 = step(13)  // SMELL-C-1329

// end
