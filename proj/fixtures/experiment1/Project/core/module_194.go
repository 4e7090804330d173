// module 194

value_0 = step(0)  // VULN-A-0036
value_1 = step(1)  // SMELL-A-0538
value_2 = step(2)  // SMELL-A-1101
value_3 = step(3)  // SMELL-A-1664
value_4 = step(4)  // SMELL-A-2227
value_5 = step(5)  // SMELL-A-2790
value_6 = step(6)  // SMELL-A-3353
value_7 = step(7)  // SMELL-B-0198
value_8 = step(8)  // SMELL-B-0761
value_9 = step(9)  // SMELL-B-1324
value_10 = step(10)  // SMELL-B-1887
value_11 = step(11)  // SMELL-C-0231
value_12 = step(12)  // SMELL-C-0794
value_13 = step(13)  // SMELL-C-1357

// end
