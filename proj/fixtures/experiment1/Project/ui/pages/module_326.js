// module 326

value_0 = step(0)  // BUG-B-0011
value_1 = step(1)  // SMELL-A-0396
value_2 = step(2)  // SMELL-A-0959
value_3 = step(3)  // SMELL-A-1522
value_4 = step(4)  // SMELL-A-2085
value_5 = step(5)  // SMELL-A-2648
value_6 = step(6)  // SMELL-A-3211
value_7 = step(7)  // SMELL-B-0056
value_8 = step(8)  // SMELL-B-0619
value_9 = step(9)  // SMELL-B-1182
value_10 = step(10)  // SMELL-B-1745
value_11 = step(11)  // SMELL-C-0089
value_12 = step(12)  // SMELL-C-0652
value_13 = step(13)  // SMELL-C-1215

// end
