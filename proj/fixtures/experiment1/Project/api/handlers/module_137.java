// module 137

value_0 = step(0)  // BUG-A-0101
value_1 = step(1)  // SMELL-A-0369
value_2 = step(2)  // SMELL-A-0932
value_3 = step(3)  // SMELL-A-1495
value_4 = step(4)  // SMELL-A-2058
value_5 = step(5)  // SMELL-A-2621
value_6 = step(6)  // SMELL-A-3184
value_7 = step(7)  // SMELL-B-0029
value_8 = step(8)  // SMELL-B-0592
value_9 = step(9)  // SMELL-B-1155
value_10 = step(10)  // SMELL-B-1718
value_11 = step(11)  // SMELL-C-0062
value_12 = step(12)  // SMELL-C-0625
value_13 = step(13)  // SMELL-C-1188

// end
