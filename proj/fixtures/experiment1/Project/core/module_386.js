// module 386

value_0 = step(0)  // BUG-B-0100
value_1 = step(1)  // SMELL-A-0485
value_2 = step(2)  // SMELL-A-1048
value_3 = step(3)  // SMELL-A-1611
value_4 = step(4)  // SMELL-A-2174
value_5 = step(5)  // SMELL-A-2737
value_6 = step(6)  // SMELL-A-3300
value_7 = step(7)  // SMELL-B-0145
value_8 = step(8)  // SMELL-B-0708
value_9 = step(9)  // SMELL-B-1271
value_10 = step(10)  // SMELL-B-1834
value_11 = step(11)  // SMELL-C-0178
value_12 = step(12)  // SMELL-C-0741
value_13 = step(13)  // SMELL-C-1304

// end
