// module 061

value_0 = step(0)  // VULN-A-0017
value_1 = step(1)  // SMELL-A-0519
value_2 = step(2)  // SMELL-A-1082
value_3 = step(3)  // SMELL-A-1645
value_4 = step(4)  // SMELL-A-2208
value_5 = step(5)  // SMELL-A-2771
value_6 = step(6)  // SMELL-A-3334
value_7 = step(7)  // SMELL-B-0179
value_8 = step(8)  // SMELL-B-0742
value_9 = step(9)  // SMELL-B-1305
value_10 = step(10)  // SMELL-B-1868
value_11 = step(11)  // SMELL-C-0212
value_12 = step(12)  // SMELL-C-0775
value_13 = step(13)  // SMELL-C-1338

// end
