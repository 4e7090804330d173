# module 470

value_0 = step(0)  # BUG-B-0112
value_1 = step(1)  # SMELL-A-0497
value_2 = step(2)  # SMELL-A-1060
value_3 = step(3)  # SMELL-A-1623
value_4 = step(4)  # SMELL-A-2186
value_5 = step(5)  # SMELL-A-2749
value_6 = step(6)  # SMELL-A-3312
value_7 = step(7)  # SMELL-B-0157
value_8 = step(8)  # SMELL-B-0720
value_9 = step(9)  # SMELL-B-1283
value_10 = step(10)  # SMELL-B-1846
value_11 = step(11)  # SMELL-C-0190
value_12 = step(12)  # SMELL-C-0753
value_13 = step(13)  # SMELL-C-1316

# end
