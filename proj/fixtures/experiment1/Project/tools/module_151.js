// module 151

value_0 = step(0)  // BUG-A-0103
value_1 = step(1)  // SMELL-A-0371
value_2 = step(2)  // SMELL-A-0934
value_3 = step(3)  // SMELL-A-1497
value_4 = step(4)  // SMELL-A-2060
value_5 = step(5)  // SMELL-A-2623
value_6 = step(6)  // SMELL-A-3186
value_7 = step(7)  // SMELL-B-0031
value_8 = step(8)  // SMELL-B-0594
value_9 = step(9)  // SMELL-B-1157
value_10 = step(10)  // SMELL-B-1720
value_11 = step(11)  // SMELL-C-0064
value_12 = step(12)  // SMELL-C-0627
value_13 = step(13)  // SMELL-C-1190

// end
