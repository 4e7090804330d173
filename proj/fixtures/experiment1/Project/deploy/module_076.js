// module 076

value_0 = step(0)  // SMELL-A-0119
value_1 = step(1)  // SMELL-A-0682
value_2 = step(2)  // SMELL-A-1245
value_3 = step(3)  // SMELL-A-1808
value_4 = step(4)  // SMELL-A-2371
value_5 = step(5)  // SMELL-A-2934
value_6 = step(6)  // SMELL-A-3497
value_7 = step(7)  // SMELL-B-0342
value_8 = step(8)  // SMELL-B-0905
value_9 = step(9)  // SMELL-B-1468
value_10 = step(10)  // SMELL-B-2031
value_11 = step(11)  // SMELL-C-0375
value_12 = step(12)  // SMELL-C-0938

// end
