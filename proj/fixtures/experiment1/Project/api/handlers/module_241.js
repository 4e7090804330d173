// module 241

value_0 = step(0)  // SMELL-A-0223
value_1 = step(1)  // SMELL-A-0786
value_2 = step(2)  // SMELL-A-1349
value_3 = step(3)  // SMELL-A-1912
value_4 = step(4)  // SMELL-A-2475
value_5 = step(5)  // SMELL-A-3038
value_6 = step(6)  // SMELL-A-3601
value_7 = step(7)  // SMELL-B-0446
value_8 = step(8)  // SMELL-B-1009
value_9 = step(9)  // SMELL-B-1572
value_10 = step(10)  // SMELL-B-2135
value_11 = step(11)  // SMELL-C-0479
value_12 = step(12)  // SMELL-C-1042

// end
