// module 306

value_0 = step(0)  // VULN-A-0052
value_1 = step(1)  // SMELL-A-0554
value_2 = step(2)  // SMELL-A-1117
value_3 = step(3)  // SMELL-A-1680
value_4 = step(4)  // SMELL-A-2243
value_5 = step(5)  // SMELL-A-2806
value_6 = step(6)  // SMELL-A-3369
value_7 = step(7)  // SMELL-B-0214
value_8 = step(8)  // SMELL-B-0777
value_9 = step(9)  // SMELL-B-1340
value_10 = step(10)  // SMELL-B-1903
value_11 = step(11)  // SMELL-C-0247
value_12 = step(12)  // SMELL-C-0810

// end
