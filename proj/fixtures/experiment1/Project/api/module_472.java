// module 472

value_0 = step(0)  // SMELL-A-0256
value_1 = step(1)  // SMELL-A-0819
value_2 = step(2)  // SMELL-A-1382
value_3 = step(3)  // SMELL-A-1945
value_4 = step(4)  // SMELL-A-2508
value_5 = step(5)  // SMELL-A-3071
value_6 = step(6)  // SMELL-A-3634
value_7 = step(7)  // SMELL-B-0479
value_8 = step(8)  // SMELL-B-1042
value_9 = step(9)  // SMELL-B-1605
value_10 = step(10)  // SMELL-B-2168
value_11 = step(11)  // SMELL-C-0512
value_12 = step(12)  // SMELL-C-1075

// end
