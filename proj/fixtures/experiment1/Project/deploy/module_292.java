// module 292

value_0 = step(0)  // VULN-A-0050
value_1 = step(1)  // SMELL-A-0552
value_2 = step(2)  // SMELL-A-1115
value_3 = step(3)  // SMELL-A-1678
value_4 = step(4)  // SMELL-A-2241
value_5 = step(5)  // SMELL-A-2804
value_6 = step(6)  // SMELL-A-3367
value_7 = step(7)  // SMELL-B-0212
value_8 = step(8)  // SMELL-B-0775
value_9 = step(9)  // SMELL-B-1338
value_10 = step(10)  // SMELL-B-1901
value_11 = step(11)  // SMELL-C-0245
value_12 = step(12)  // SMELL-C-0808

// end
