// module 202

value_0 = step(0)  // SMELL-A-0137
value_1 = step(1)  // SMELL-A-0700
value_2 = step(2)  // SMELL-A-1263
value_3 = step(3)  // SMELL-A-1826
value_4 = step(4)  // SMELL-A-2389
value_5 = step(5)  // SMELL-A-2952
value_6 = step(6)  // SMELL-A-3515
value_7 = step(7)  // SMELL-B-0360
value_8 = step(8)  // SMELL-B-0923
value_9 = step(9)  // SMELL-B-1486
value_10 = step(10)  // SMELL-B-2049
value_11 = step(11)  // SMELL-C-0393
value_12 = step(12)  // SMELL-C-0956

// end
