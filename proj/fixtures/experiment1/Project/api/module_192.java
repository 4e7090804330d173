// module 192

value_0 = step(0)  // SMELL-A-0216
value_1 = step(1)  // SMELL-A-0779
value_2 = step(2)  // SMELL-A-1342
value_3 = step(3)  // SMELL-A-1905
value_4 = step(4)  // SMELL-A-2468
value_5 = step(5)  // SMELL-A-3031
value_6 = step(6)  // SMELL-A-3594
value_7 = step(7)  // SMELL-B-0439
value_8 = step(8)  // SMELL-B-1002
value_9 = step(9)  // SMELL-B-1565
value_10 = step(10)  // SMELL-B-2128
value_11 = step(11)  // SMELL-C-0472
value_12 = step(12)  // SMELL-C-1035

// end
