// module 152

value_0 = step(0)  // VULN-A-0030
value_1 = step(1)  // SMELL-A-0532
value_2 = step(2)  // SMELL-A-1095
value_3 = step(3)  // SMELL-A-1658
value_4 = step(4)  // SMELL-A-2221
value_5 = step(5)  // SMELL-A-2784
value_6 = step(6)  // SMELL-A-3347
value_7 = step(7)  // SMELL-B-0192
value_8 = step(8)  // SMELL-B-0755
value_9 = step(9)  // SMELL-B-1318
value_10 = step(10)  // SMELL-B-1881
value_11 = step(11)  // SMELL-C-0225
value_12 = step(12)  // SMELL-C-0788
value_13 = step(13)  // SMELL-C-1351

// end
