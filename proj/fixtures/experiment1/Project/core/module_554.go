// module 554

value_0 = step(0)  // VULN-A-0007
value_1 = step(1)  // SMELL-A-0509
value_2 = step(2)  // SMELL-A-1072
value_3 = step(3)  // SMELL-A-1635
value_4 = step(4)  // SMELL-A-2198
value_5 = step(5)  // SMELL-A-2761
value_6 = step(6)  // SMELL-A-3324
value_7 = step(7)  // SMELL-B-0169
value_8 = step(8)  // SMELL-B-0732
value_9 = step(9)  // SMELL-B-1295
value_10 = step(10)  // SMELL-B-1858
value_11 = step(11)  // SMELL-C-0202
value_12 = step(12)  // SMELL-C-0765
value_13 = step(13)  // SMELL-C-1328

// end
