// module 032

value_0 = step(0)  // BUG-A-0086
value_1 = step(1)  // SMELL-A-0354
value_2 = step(2)  // SMELL-A-0917
value_3 = step(3)  // SMELL-A-1480
value_4 = step(4)  // SMELL-A-2043
value_5 = step(5)  // SMELL-A-2606
value_6 = step(6)  // SMELL-A-3169
value_7 = step(7)  // SMELL-B-0014
value_8 = step(8)  // SMELL-B-0577
value_9 = step(9)  // SMELL-B-1140
value_10 = step(10)  // SMELL-B-1703
value_11 = step(11)  // SMELL-C-0047
value_12 = step(12)  // SMELL-C-0610
value_13 = step(13)  // SMELL-C-1173

// end
