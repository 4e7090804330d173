// module 264

value_0 = step(0)  // VULN-A-0046
value_1 = step(1)  // SMELL-A-0548
value_2 = step(2)  // SMELL-A-1111
value_3 = step(3)  // SMELL-A-1674
value_4 = step(4)  // SMELL-A-2237
value_5 = step(5)  // SMELL-A-2800
value_6 = step(6)  // SMELL-A-3363
value_7 = step(7)  // SMELL-B-0208
value_8 = step(8)  // SMELL-B-0771
value_9 = step(9)  // SMELL-B-1334
value_10 = step(10)  // SMELL-B-1897
value_11 = step(11)  // SMELL-C-0241
value_12 = step(12)  // SMELL-C-0804
value_13 = step(13)  // SMELL-C-1367

// end
