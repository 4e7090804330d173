// module 139

value_0 = step(0)  // SMELL-A-0128
value_1 = step(1)  // SMELL-A-0691
value_2 = step(2)  // SMELL-A-1254
value_3 = step(3)  // SMELL-A-1817
value_4 = step(4)  // SMELL-A-2380
value_5 = step(5)  // SMELL-A-2943
value_6 = step(6)  // SMELL-A-3506
value_7 = step(7)  // SMELL-B-0351
value_8 = step(8)  // SMELL-B-0914
value_9 = step(9)  // SMELL-B-1477
value_10 = step(10)  // SMELL-B-2040
value_11 = step(11)  // SMELL-C-0384
value_12 = step(12)  // SMELL-C-0947

// end
