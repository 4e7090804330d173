// module 297

value_0 = step(0)  // SMELL-A-0231
value_1 = step(1)  // SMELL-A-0794
value_2 = step(2)  // SMELL-A-1357
value_3 = step(3)  // SMELL-A-1920
value_4 = step(4)  // SMELL-A-2483
value_5 = step(5)  // SMELL-A-3046
value_6 = step(6)  // SMELL-A-3609
value_7 = step(7)  // SMELL-B-0454
value_8 = step(8)  // SMELL-B-1017
value_9 = step(9)  // SMELL-B-1580
value_10 = step(10)  // SMELL-B-2143
value_11 = step(11)  // SMELL-C-0487
value_12 = step(12)  // SMELL-C-1050

// end
