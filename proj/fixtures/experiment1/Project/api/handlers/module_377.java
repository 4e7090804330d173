// module 377

value_0 = step(0)  // SMELL-A-0162
value_1 = step(1)  // SMELL-A-0725
value_2 = step(2)  // SMELL-A-1288
value_3 = step(3)  // SMELL-A-1851
value_4 = step(4)  // SMELL-A-2414
value_5 = step(5)  // SMELL-A-2977
value_6 = step(6)  // SMELL-A-3540
value_7 = step(7)  // SMELL-B-0385
value_8 = step(8)  // SMELL-B-0948
value_9 = step(9)  // SMELL-B-1511
value_10 = step(10)  // SMELL-B-2074
value_11 = step(11)  // SMELL-C-0418
value_12 = step(12)  // SMELL-C-0981

// end
