// module 236

value_0 = step(0)  // VULN-A-0042
value_1 = step(1)  // SMELL-A-0544
value_2 = step(2)  // SMELL-A-1107
value_3 = step(3)  // SMELL-A-1670
value_4 = step(4)  // SMELL-A-2233
value_5 = step(5)  // SMELL-A-2796
value_6 = step(6)  // SMELL-A-3359
value_7 = step(7)  // SMELL-B-0204
value_8 = step(8)  // SMELL-B-0767
value_9 = step(9)  // SMELL-B-1330
value_10 = step(10)  // SMELL-B-1893
value_11 = step(11)  // SMELL-C-0237
value_12 = step(12)  // SMELL-C-0800
value_13 = step(13)  // SMELL-C-1363

// end
