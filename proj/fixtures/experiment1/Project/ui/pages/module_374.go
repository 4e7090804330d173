// module 374

value_0 = step(0)  // SMELL-A-0242
value_1 = step(1)  // SMELL-A-0805
value_2 = step(2)  // SMELL-A-1368
value_3 = step(3)  // SMELL-A-1931
value_4 = step(4)  // SMELL-A-2494
value_5 = step(5)  // SMELL-A-3057
value_6 = step(6)  // SMELL-A-3620
value_7 = step(7)  // SMELL-B-0465
value_8 = step(8)  // SMELL-B-1028
value_9 = step(9)  // SMELL-B-1591
value_10 = step(10)  // SMELL-B-2154
value_11 = step(11)  // SMELL-C-0498
value_12 = step(12)  // SMELL-C-1061

// end
