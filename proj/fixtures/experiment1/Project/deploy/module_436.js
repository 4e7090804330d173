// module 436

value_0 = step(0)  // SMELL-A-0090
value_1 = step(1)  // SMELL-A-0653
value_2 = step(2)  // SMELL-A-1216
value_3 = step(3)  // SMELL-A-1779
value_4 = step(4)  // SMELL-A-2342
value_5 = step(5)  // SMELL-A-2905
value_6 = step(6)  // SMELL-A-3468
value_7 = step(7)  // SMELL-B-0313
value_8 = step(8)  // SMELL-B-0876
value_9 = step(9)  // SMELL-B-1439
value_10 = step(10)  // SMELL-B-2002
value_11 = step(11)  // SMELL-C-0346
value_12 = step(12)  // SMELL-C-0909

// end
