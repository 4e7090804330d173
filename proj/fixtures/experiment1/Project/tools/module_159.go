// module 159

value_0 = step(0)  // VULN-A-0031
value_1 = step(1)  // SMELL-A-0533
value_2 = step(2)  // SMELL-A-1096
value_3 = step(3)  // SMELL-A-1659
value_4 = step(4)  // SMELL-A-2222
value_5 = step(5)  // SMELL-A-2785
value_6 = step(6)  // SMELL-A-3348
value_7 = step(7)  // SMELL-B-0193
value_8 = step(8)  // SMELL-B-0756
value_9 = step(9)  // SMELL-B-1319
value_10 = step(10)  // SMELL-B-1882
value_11 = step(11)  // SMELL-C-0226
value_12 = step(12)  // SMELL-C-0789
value_13 = step(13)  // SMELL-C-1352

// end
