// module 187

value_0 = step(0)  // VULN-A-0035
value_1 = step(1)  // SMELL-A-0537
value_2 = step(2)  // SMELL-A-1100
value_3 = step(3)  // SMELL-A-1663
value_4 = step(4)  // SMELL-A-2226
value_5 = step(5)  // SMELL-A-2789
value_6 = step(6)  // SMELL-A-3352
value_7 = step(7)  // SMELL-B-0197
value_8 = step(8)  // SMELL-B-0760
value_9 = step(9)  // SMELL-B-1323
value_10 = step(10)  // SMELL-B-1886
value_11 = step(11)  // SMELL-C-0230
value_12 = step(12)  // SMELL-C-0793
value_13 = step(13)  // SMELL-C-1356

// end
