// module 356

value_0 = step(0)  // SMELL-A-0159
value_1 = step(1)  // SMELL-A-0722
value_2 = step(2)  // SMELL-A-1285
value_3 = step(3)  // SMELL-A-1848
value_4 = step(4)  // SMELL-A-2411
value_5 = step(5)  // SMELL-A-2974
value_6 = step(6)  // SMELL-A-3537
value_7 = step(7)  // SMELL-B-0382
value_8 = step(8)  // SMELL-B-0945
value_9 = step(9)  // SMELL-B-1508
value_10 = step(10)  // SMELL-B-2071
value_11 = step(11)  // SMELL-C-0415
value_12 = step(12)  // SMELL-C-0978

// end
