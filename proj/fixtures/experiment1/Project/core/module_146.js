// module 146

value_0 = step(0)  // SMELL-A-0129
value_1 = step(1)  // SMELL-A-0692
value_2 = step(2)  // SMELL-A-1255
value_3 = step(3)  // SMELL-A-1818
value_4 = step(4)  // SMELL-A-2381
value_5 = step(5)  // SMELL-A-2944
value_6 = step(6)  // SMELL-A-3507
value_7 = step(7)  // SMELL-B-0352
value_8 = step(8)  // SMELL-B-0915
value_9 = step(9)  // SMELL-B-1478
value_10 = step(10)  // SMELL-B-2041
value_11 = step(11)  // SMELL-C-0385
value_12 = step(12)  // SMELL-C-0948

// end
