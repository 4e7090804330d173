// module 271

value_0 = step(0)  // VULN-A-0047
value_1 = step(1)  // SMELL-A-0549
value_2 = step(2)  // SMELL-A-1112
value_3 = step(3)  // SMELL-A-1675
value_4 = step(4)  // SMELL-A-2238
value_5 = step(5)  // SMELL-A-2801
value_6 = step(6)  // SMELL-A-3364
value_7 = step(7)  // SMELL-B-0209
value_8 = step(8)  // SMELL-B-0772
value_9 = step(9)  // SMELL-B-1335
value_10 = step(10)  // SMELL-B-1898
value_11 = step(11)  // SMELL-C-0242
value_12 = step(12)  // SMELL-C-0805

// end
