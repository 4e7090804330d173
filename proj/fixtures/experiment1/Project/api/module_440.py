# module 440

value_0 = step(0)  # SMELL-A-0171
value_1 = step(1)  # SMELL-A-0734
value_2 = step(2)  # SMELL-A-1297
value_3 = step(3)  # SMELL-A-1860
value_4 = step(4)  # SMELL-A-2423
value_5 = step(5)  # SMELL-A-2986
value_6 = step(6)  # SMELL-A-3549
value_7 = step(7)  # SMELL-B-0394
value_8 = step(8)  # SMELL-B-0957
value_9 = step(9)  # SMELL-B-1520
value_10 = step(10)  # SMELL-B-2083
value_11 = step(11)  # SMELL-C-0427
value_12 = step(12)  # SMELL-C-0990

# end
