// module 494

value_0 = step(0)  // BUG-B-0035
value_1 = step(1)  // SMELL-A-0420
value_2 = step(2)  // SMELL-A-0983
value_3 = step(3)  // SMELL-A-1546
value_4 = step(4)  // SMELL-A-2109
value_5 = step(5)  // SMELL-A-2672
value_6 = step(6)  // SMELL-A-3235
value_7 = step(7)  // SMELL-B-0080
value_8 = step(8)  // SMELL-B-0643
value_9 = step(9)  // SMELL-B-1206
value_10 = step(10)  // SMELL-B-1769
value_11 = step(11)  // SMELL-C-0113
value_12 = step(12)  // SMELL-C-0676
value_13 = step(13)  // SMELL-C-1239

// end
