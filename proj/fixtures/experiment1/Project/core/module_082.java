// module 082

value_0 = step(0)  // VULN-A-0020
value_1 = step(1)  // SMELL-A-0522
value_2 = step(2)  // SMELL-A-1085
value_3 = step(3)  // SMELL-A-1648
value_4 = step(4)  // SMELL-A-2211
value_5 = step(5)  // SMELL-A-2774
value_6 = step(6)  // SMELL-A-3337
value_7 = step(7)  // SMELL-B-0182
value_8 = step(8)  // SMELL-B-0745
value_9 = step(9)  // SMELL-B-1308
value_10 = step(10)  // SMELL-B-1871
value_11 = step(11)  // SMELL-C-0215
value_12 = step(12)  // SMELL-C-0778
value_13 = step(13)  // SMELL-C-1341

// end
