// module 424

value_0 = step(0)  // BUG-B-0025
value_1 = step(1)  // SMELL-A-0410
value_2 = step(2)  // SMELL-A-0973
value_3 = step(3)  // SMELL-A-1536
value_4 = step(4)  // SMELL-A-2099
value_5 = step(5)  // SMELL-A-2662
value_6 = step(6)  // SMELL-A-3225
value_7 = step(7)  // SMELL-B-0070
value_8 = step(8)  // SMELL-B-0633
value_9 = step(9)  // SMELL-B-1196
value_10 = step(10)  // SMELL-B-1759
value_11 = step(11)  // SMELL-C-0103
value_12 = step(12)  // SMELL-C-0666
value_13 = step(13)  // SMELL-C-1229

// end
