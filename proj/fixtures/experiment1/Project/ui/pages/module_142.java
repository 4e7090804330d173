// module 142

value_0 = step(0)  // SMELL-A-0048
value_1 = step(1)  // SMELL-A-0611
value_2 = step(2)  // SMELL-A-1174
value_3 = step(3)  // SMELL-A-1737
value_4 = step(4)  // SMELL-A-2300
value_5 = step(5)  // SMELL-A-2863
value_6 = step(6)  // SMELL-A-3426
value_7 = step(7)  // SMELL-B-0271
value_8 = step(8)  // SMELL-B-0834
value_9 = step(9)  // SMELL-B-1397
value_10 = step(10)  // SMELL-B-1960
value_11 = step(11)  // SMELL-C-0304
value_12 = step(12)  // SMELL-C-0867

// end
