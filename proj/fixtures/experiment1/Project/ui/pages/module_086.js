// module 086

value_0 = step(0)  // SMELL-A-0040
value_1 = step(1)  // SMELL-A-0603
value_2 = step(2)  // SMELL-A-1166
value_3 = step(3)  // SMELL-A-1729
value_4 = step(4)  // SMELL-A-2292
value_5 = step(5)  // SMELL-A-2855
value_6 = step(6)  // SMELL-A-3418
value_7 = step(7)  // SMELL-B-0263
value_8 = step(8)  // SMELL-B-0826
value_9 = step(9)  // SMELL-B-1389
value_10 = step(10)  // SMELL-B-1952
value_11 = step(11)  // SMELL-C-0296
value_12 = step(12)  // SMELL-C-0859

// end
