// module 204

value_0 = step(0)  // BUG-B-0074
value_1 = step(1)  // SMELL-A-0459
value_2 = step(2)  // SMELL-A-1022
value_3 = step(3)  // SMELL-A-1585
value_4 = step(4)  // SMELL-A-2148
value_5 = step(5)  // SMELL-A-2711
value_6 = step(6)  // SMELL-A-3274
value_7 = step(7)  // SMELL-B-0119
value_8 = step(8)  // SMELL-B-0682
value_9 = step(9)  // SMELL-B-1245
value_10 = step(10)  // SMELL-B-1808
value_11 = step(11)  // SMELL-C-0152
value_12 = step(12)  // SMELL-C-0715
value_13 = step(13)  // SMELL-C-1278

// end
