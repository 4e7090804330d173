// module 069

value_0 = step(0)  // SMELL-A-0118
value_1 = step(1)  // SMELL-A-0681
value_2 = step(2)  // SMELL-A-1244
value_3 = step(3)  // SMELL-A-1807
value_4 = step(4)  // SMELL-A-2370
value_5 = step(5)  // SMELL-A-2933
value_6 = step(6)  // SMELL-A-3496
value_7 = step(7)  // SMELL-B-0341
value_8 = step(8)  // SMELL-B-0904
value_9 = step(9)  // SMELL-B-1467
value_10 = step(10)  // SMELL-B-2030
value_11 = step(11)  // SMELL-C-0374
value_12 = step(12)  // SMELL-C-0937

// end
