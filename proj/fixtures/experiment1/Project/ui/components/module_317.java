// module 317

value_0 = step(0)  // SMELL-A-0073
value_1 = step(1)  // SMELL-A-0636
value_2 = step(2)  // SMELL-A-1199
value_3 = step(3)  // SMELL-A-1762
value_4 = step(4)  // SMELL-A-2325
value_5 = step(5)  // SMELL-A-2888
value_6 = step(6)  // SMELL-A-3451
value_7 = step(7)  // SMELL-B-0296
value_8 = step(8)  // SMELL-B-0859
value_9 = step(9)  // SMELL-B-1422
value_10 = step(10)  // SMELL-B-1985
value_11 = step(11)  // SMELL-C-0329
value_12 = step(12)  // SMELL-C-0892

// end
