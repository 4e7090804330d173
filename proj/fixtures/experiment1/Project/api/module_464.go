// module 464

value_0 = step(0)  // SMELL-A-0094
value_1 = step(1)  // SMELL-A-0657
value_2 = step(2)  // SMELL-A-1220
value_3 = step(3)  // SMELL-A-1783
value_4 = step(4)  // SMELL-A-2346
value_5 = step(5)  // SMELL-A-2909
value_6 = step(6)  // SMELL-A-3472
value_7 = step(7)  // SMELL-B-0317
value_8 = step(8)  // SMELL-B-0880
value_9 = step(9)  // SMELL-B-1443
value_10 = step(10)  // SMELL-B-2006
value_11 = step(11)  // SMELL-C-0350
value_12 = step(12)  // SMELL-C-0913

// end
