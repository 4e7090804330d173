// module 499

value_0 = step(0)  // SMELL-A-0099
value_1 = step(1)  // SMELL-A-0662
value_2 = step(2)  // SMELL-A-1225
value_3 = step(3)  // SMELL-A-1788
value_4 = step(4)  // SMELL-A-2351
value_5 = step(5)  // SMELL-A-2914
value_6 = step(6)  // SMELL-A-3477
value_7 = step(7)  // SMELL-B-0322
value_8 = step(8)  // SMELL-B-0885
value_9 = step(9)  // SMELL-B-1448
value_10 = step(10)  // SMELL-B-2011
value_11 = step(11)  // SMELL-C-0355
value_12 = step(12)  // SMELL-C-0918

// end
