// module 512

value_0 = step(0)  // VULN-A-0001
value_1 = step(1)  // SMELL-A-0503
value_2 = step(2)  // SMELL-A-1066
value_3 = step(3)  // SMELL-A-1629
value_4 = step(4)  // SMELL-A-2192
value_5 = step(5)  // SMELL-A-2755
value_6 = step(6)  // SMELL-A-3318
value_7 = step(7)  // SMELL-B-0163
value_8 = step(8)  // SMELL-B-0726
value_9 = step(9)  // SMELL-B-1289
value_10 = step(10)  // SMELL-B-1852
value_11 = step(11)  // SMELL-C-0196
value_12 = step(12)  // SMELL-C-0759
value_13 = step(13)  // SMELL-C-1322

// end
