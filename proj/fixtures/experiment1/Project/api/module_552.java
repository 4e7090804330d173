// module 552

value_0 = step(0)  // SMELL-A-0187
value_1 = step(1)  // SMELL-A-0750
value_2 = step(2)  // SMELL-A-1313
value_3 = step(3)  // SMELL-A-1876
value_4 = step(4)  // SMELL-A-2439
value_5 = step(5)  // SMELL-A-3002
value_6 = step(6)  // SMELL-A-3565
value_7 = step(7)  // SMELL-B-0410
value_8 = step(8)  // SMELL-B-0973
value_9 = step(9)  // SMELL-B-1536
value_10 = step(10)  // SMELL-B-2099
value_11 = step(11)  // SMELL-C-0443
value_12 = step(12)  // SMELL-C-1006

// end
