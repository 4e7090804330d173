// module 027

value_0 = step(0)  // VULN-A-0001
value_1 = step(1)  // SMELL-A-0039
value_2 = step(2)  // SMELL-A-0079
value_3 = step(3)  // SMELL-A-0119
value_4 = step(4)  // SMELL-A-0159
value_5 = step(5)  // SMELL-A-0199
value_6 = step(6)  // SMELL-A-0239
value_7 = step(7)  // SMELL-A-0279
value_8 = step(8)  // SMELL-A-0319
value_9 = step(9)  // SMELL-A-0359
value_10 = step(10)  // SMELL-C-0002

// end
