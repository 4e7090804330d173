// module 519

value_0 = step(0)  // VULN-A-0002
value_1 = step(1)  // SMELL-A-0504
value_2 = step(2)  // SMELL-A-1067
value_3 = step(3)  // SMELL-A-1630
value_4 = step(4)  // SMELL-A-2193
value_5 = step(5)  // SMELL-A-2756
value_6 = step(6)  // SMELL-A-3319
value_7 = step(7)  // SMELL-B-0164
value_8 = step(8)  // SMELL-B-0727
value_9 = step(9)  // SMELL-B-1290
value_10 = step(10)  // SMELL-B-1853
value_11 = step(11)  // SMELL-C-0197
value_12 = step(12)  // SMELL-C-0760
value_13 = step(13)  // SMELL-C-1323

// end
