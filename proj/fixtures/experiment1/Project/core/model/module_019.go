// module 019

value_0 = step(0)  // VULN-A-0011
value_1 = step(1)  // SMELL-A-0513
value_2 = step(2)  // SMELL-A-1076
value_3 = step(3)  // SMELL-A-1639
value_4 = step(4)  // SMELL-A-2202
value_5 = step(5)  // SMELL-A-2765
value_6 = step(6)  // SMELL-A-3328
value_7 = step(7)  // SMELL-B-0173
value_8 = step(8)  // SMELL-B-0736
value_9 = step(9)  // SMELL-B-1299
value_10 = step(10)  // SMELL-B-1862
value_11 = step(11)  // SMELL-C-0206
value_12 = step(12)  // SMELL-C-0769
value_13 = step(13)  // SMELL-C-1332

// end
