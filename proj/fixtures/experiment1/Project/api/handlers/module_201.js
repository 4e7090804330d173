// module 201

value_0 = step(0)  // VULN-A-0037
value_1 = step(1)  // SMELL-A-0539
value_2 = step(2)  // SMELL-A-1102
value_3 = step(3)  // SMELL-A-1665
value_4 = step(4)  // SMELL-A-2228
value_5 = step(5)  // SMELL-A-2791
value_6 = step(6)  // SMELL-A-3354
value_7 = step(7)  // SMELL-B-0199
value_8 = step(8)  // SMELL-B-0762
value_9 = step(9)  // SMELL-B-1325
value_10 = step(10)  // SMELL-B-1888
value_11 = step(11)  // SMELL-C-0232
value_12 = step(12)  // SMELL-C-0795
value_13 = step(13)  // SMELL-C-1358

// end
