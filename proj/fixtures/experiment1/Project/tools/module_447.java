// module 447

value_0 = step(0)  // SMELL-A-0172
value_1 = step(1)  // SMELL-A-0735
value_2 = step(2)  // SMELL-A-1298
value_3 = step(3)  // SMELL-A-1861
value_4 = step(4)  // SMELL-A-2424
value_5 = step(5)  // SMELL-A-2987
value_6 = step(6)  // SMELL-A-3550
value_7 = step(7)  // SMELL-B-0395
value_8 = step(8)  // SMELL-B-0958
value_9 = step(9)  // SMELL-B-1521
value_10 = step(10)  // SMELL-B-2084
value_11 = step(11)  // SMELL-C-0428
value_12 = step(12)  // SMELL-C-0991

// end
