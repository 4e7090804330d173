// module 331

value_0 = step(0)  // SMELL-A-0075
value_1 = step(1)  // SMELL-A-0638
value_2 = step(2)  // SMELL-A-1201
value_3 = step(3)  // SMELL-A-1764
value_4 = step(4)  // SMELL-A-2327
value_5 = step(5)  // SMELL-A-2890
value_6 = step(6)  // SMELL-A-3453
value_7 = step(7)  // SMELL-B-0298
value_8 = step(8)  // SMELL-B-0861
value_9 = step(9)  // SMELL-B-1424
value_10 = step(10)  // SMELL-B-1987
value_11 = step(11)  // SMELL-C-0331
value_12 = step(12)  // SMELL-C-0894

// end
