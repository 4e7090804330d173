// module 024

value_0 = step(0)  // SMELL-A-0192
value_1 = step(1)  // SMELL-A-0755
value_2 = step(2)  // SMELL-A-1318
value_3 = step(3)  // SMELL-A-1881
value_4 = step(4)  // SMELL-A-2444
value_5 = step(5)  // SMELL-A-3007
value_6 = step(6)  // SMELL-A-3570
value_7 = step(7)  // SMELL-B-0415
value_8 = step(8)  // SMELL-B-0978
value_9 = step(9)  // SMELL-B-1541
value_10 = step(10)  // SMELL-B-2104
value_11 = step(11)  // SMELL-C-0448
value_12 = step(12)  // SMELL-C-1011

// end
