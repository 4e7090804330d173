// module 172

value_0 = step(0)  // BUG-A-0106
value_1 = step(1)  // SMELL-A-0374
value_2 = step(2)  // SMELL-A-0937
value_3 = step(3)  // SMELL-A-1500
value_4 = step(4)  // SMELL-A-2063
value_5 = step(5)  // SMELL-A-2626
value_6 = step(6)  // SMELL-A-3189
value_7 = step(7)  // SMELL-B-0034
value_8 = step(8)  // SMELL-B-0597
value_9 = step(9)  // SMELL-B-1160
value_10 = step(10)  // SMELL-B-1723
value_11 = step(11)  // SMELL-C-0067
value_12 = step(12)  // SMELL-C-0630
value_13 = step(13)  // SMELL-C-1193

// end
