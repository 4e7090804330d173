// module 351

value_0 = step(0)  // BUG-B-0095
value_1 = step(1)  // SMELL-A-0480
value_2 = step(2)  // SMELL-A-1043
value_3 = step(3)  // SMELL-A-1606
value_4 = step(4)  // SMELL-A-2169
value_5 = step(5)  // SMELL-A-2732
value_6 = step(6)  // SMELL-A-3295
value_7 = step(7)  // SMELL-B-0140
value_8 = step(8)  // SMELL-B-0703
value_9 = step(9)  // SMELL-B-1266
value_10 = step(10)  // SMELL-B-1829
value_11 = step(11)  // SMELL-C-0173
value_12 = step(12)  // SMELL-C-0736
value_13 = step(13)  // SMELL-C-1299

// end
