// module 249

value_0 = step(0)  // BUG-A-0117
value_1 = step(1)  // SMELL-A-0385
value_2 = step(2)  // SMELL-A-0948
value_3 = step(3)  // SMELL-A-1511
value_4 = step(4)  // SMELL-A-2074
value_5 = step(5)  // SMELL-A-2637
value_6 = step(6)  // SMELL-A-3200
value_7 = step(7)  // SMELL-B-0045
value_8 = step(8)  // SMELL-B-0608
value_9 = step(9)  // SMELL-B-1171
value_10 = step(10)  // SMELL-B-1734
value_11 = step(11)  // SMELL-C-0078
value_12 = step(12)  // SMELL-C-0641
value_13 = step(13)  // SMELL-C-1204

// end
