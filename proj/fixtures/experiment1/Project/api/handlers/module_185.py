# module 185

value_0 = step(0)  # SMELL-A-0215
value_1 = step(1)  # SMELL-A-0778
value_2 = step(2)  # SMELL-A-1341
value_3 = step(3)  # SMELL-A-1904
value_4 = step(4)  # SMELL-A-2467
value_5 = step(5)  # SMELL-A-3030
value_6 = step(6)  # SMELL-A-3593
value_7 = step(7)  # SMELL-B-0438
value_8 = step(8)  # SMELL-B-1001
value_9 = step(9)  # SMELL-B-1564
value_10 = step(10)  # SMELL-B-2127
value_11 = step(11)  # SMELL-C-0471
value_12 = step(12)  # SMELL-C-1034

# end
