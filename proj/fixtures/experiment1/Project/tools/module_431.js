// module 431

value_0 = step(0)  // BUG-B-0026
value_1 = step(1)  // SMELL-A-0411
value_2 = step(2)  // SMELL-A-0974
value_3 = step(3)  // SMELL-A-1537
value_4 = step(4)  // SMELL-A-2100
value_5 = step(5)  // SMELL-A-2663
value_6 = step(6)  // SMELL-A-3226
value_7 = step(7)  // SMELL-B-0071
value_8 = step(8)  // SMELL-B-0634
value_9 = step(9)  // SMELL-B-1197
value_10 = step(10)  // SMELL-B-1760
value_11 = step(11)  // SMELL-C-0104
value_12 = step(12)  // SMELL-C-0667
value_13 = step(13)  // SMELL-C-1230

// end
