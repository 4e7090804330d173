// module 384

value_0 = step(0)  // SMELL-A-0163
value_1 = step(1)  // SMELL-A-0726
value_2 = step(2)  // SMELL-A-1289
value_3 = step(3)  // SMELL-A-1852
value_4 = step(4)  // SMELL-A-2415
value_5 = step(5)  // SMELL-A-2978
value_6 = step(6)  // SMELL-A-3541
value_7 = step(7)  // SMELL-B-0386
value_8 = step(8)  // SMELL-B-0949
value_9 = step(9)  // SMELL-B-1512
value_10 = step(10)  // SMELL-B-2075
value_11 = step(11)  // SMELL-C-0419
value_12 = step(12)  // SMELL-C-0982

// end
