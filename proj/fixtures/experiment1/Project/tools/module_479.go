// module 479

value_0 = step(0)  // SMELL-A-0257
value_1 = step(1)  // SMELL-A-0820
value_2 = step(2)  // SMELL-A-1383
value_3 = step(3)  // SMELL-A-1946
value_4 = step(4)  // SMELL-A-2509
value_5 = step(5)  // SMELL-A-3072
value_6 = step(6)  // SMELL-A-3635
value_7 = step(7)  // SMELL-B-0480
value_8 = step(8)  // SMELL-B-1043
value_9 = step(9)  // SMELL-B-1606
value_10 = step(10)  // SMELL-B-2169
value_11 = step(11)  // SMELL-C-0513
value_12 = step(12)  // SMELL-C-1076

// end
