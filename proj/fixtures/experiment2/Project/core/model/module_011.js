// module 011

value_0 = step(0)  // BUG-A-0014
value_1 = step(1)  // SMELL-A-0031
value_2 = step(2)  // SMELL-A-0071
value_3 = step(3)  // SMELL-A-0111
value_4 = step(4)  // SMELL-A-0151
value_5 = step(5)  // SMELL-A-0191
value_6 = step(6)  // SMELL-A-0231
value_7 = step(7)  // SMELL-A-0271
value_8 = step(8)  // SMELL-A-0311
value_9 = step(9)  // SMELL-A-0351
value_10 = step(10)  // SMELL-B-0022

// end
