// module 409

value_0 = step(0)  // SMELL-A-0247
value_1 = step(1)  // SMELL-A-0810
value_2 = step(2)  // SMELL-A-1373
value_3 = step(3)  // SMELL-A-1936
value_4 = step(4)  // SMELL-A-2499
value_5 = step(5)  // SMELL-A-3062
value_6 = step(6)  // SMELL-A-3625
value_7 = step(7)  // SMELL-B-0470
value_8 = step(8)  // SMELL-B-1033
value_9 = step(9)  // SMELL-B-1596
value_10 = step(10)  // SMELL-B-2159
value_11 = step(11)  // SMELL-C-0503
value_12 = step(12)  // SMELL-C-1066

// end
