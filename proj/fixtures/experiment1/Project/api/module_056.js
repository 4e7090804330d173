// module 056

value_0 = step(0)  // BUG-A-0009
value_1 = step(1)  // SMELL-A-0277
value_2 = step(2)  // SMELL-A-0840
value_3 = step(3)  // SMELL-A-1403
value_4 = step(4)  // SMELL-A-1966
value_5 = step(5)  // SMELL-A-2529
value_6 = step(6)  // SMELL-A-3092
value_7 = step(7)  // SMELL-A-3655
value_8 = step(8)  // SMELL-B-0500
value_9 = step(9)  // SMELL-B-1063
value_10 = step(10)  // SMELL-B-1626
value_11 = step(11)  // SMELL-B-2189
value_12 = step(12)  // SMELL-C-0533
value_13 = step(13)  // SMELL-C-1096

// end
