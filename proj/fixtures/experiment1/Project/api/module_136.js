// module 136

value_0 = step(0)  // SMELL-A-0208
value_1 = step(1)  // SMELL-A-0771
value_2 = step(2)  // SMELL-A-1334
value_3 = step(3)  // SMELL-A-1897
value_4 = step(4)  // SMELL-A-2460
value_5 = step(5)  // SMELL-A-3023
value_6 = step(6)  // SMELL-A-3586
value_7 = step(7)  // SMELL-B-0431
value_8 = step(8)  // SMELL-B-0994
value_9 = step(9)  // SMELL-B-1557
value_10 = step(10)  // SMELL-B-2120
value_11 = step(11)  // SMELL-C-0464
value_12 = step(12)  // SMELL-C-1027

// end
