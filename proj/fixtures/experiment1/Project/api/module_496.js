// module 496

value_0 = step(0)  // SMELL-A-0179
value_1 = step(1)  // SMELL-A-0742
value_2 = step(2)  // SMELL-A-1305
value_3 = step(3)  // SMELL-A-1868
value_4 = step(4)  // SMELL-A-2431
value_5 = step(5)  // SMELL-A-2994
value_6 = step(6)  // SMELL-A-3557
value_7 = step(7)  // SMELL-B-0402
value_8 = step(8)  // SMELL-B-0965
value_9 = step(9)  // SMELL-B-1528
value_10 = step(10)  // SMELL-B-2091
value_11 = step(11)  // SMELL-C-0435
value_12 = step(12)  // SMELL-C-0998

// end
