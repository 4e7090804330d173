// module 012

value_0 = step(0)  // VULN-A-0010
value_1 = step(1)  // SMELL-A-0512
value_2 = step(2)  // SMELL-A-1075
value_3 = step(3)  // SMELL-A-1638
value_4 = step(4)  // SMELL-A-2201
value_5 = step(5)  // SMELL-A-2764
value_6 = step(6)  // SMELL-A-3327
value_7 = step(7)  // SMELL-B-0172
value_8 = step(8)  // SMELL-B-0735
value_9 = step(9)  // SMELL-B-1298
value_10 = step(10)  // SMELL-B-1861
value_11 = step(11)  // SMELL-C-0205
value_12 = step(12)  // SMELL-C-0768
value_13 = step(13)  // SMELL-C-1331

// end
