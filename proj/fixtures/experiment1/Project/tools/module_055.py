# module 055

value_0 = step(0)  # SMELL-A-0116
value_1 = step(1)  # SMELL-A-0679
value_2 = step(2)  # SMELL-A-1242
value_3 = step(3)  # SMELL-A-1805
value_4 = step(4)  # SMELL-A-2368
value_5 = step(5)  # SMELL-A-2931
value_6 = step(6)  # SMELL-A-3494
value_7 = step(7)  # SMELL-B-0339
value_8 = step(8)  # SMELL-B-0902
value_9 = step(9)  # SMELL-B-1465
value_10 = step(10)  # SMELL-B-2028
value_11 = step(11)  # SMELL-C-0372
value_12 = step(12)  # SMELL-C-0935

# end
