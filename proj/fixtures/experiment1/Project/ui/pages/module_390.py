# module 390

value_0 = step(0)  # SMELL-A-0003
value_1 = step(1)  # SMELL-A-0566
value_2 = step(2)  # SMELL-A-1129
value_3 = step(3)  # SMELL-A-1692
value_4 = step(4)  # SMELL-A-2255
value_5 = step(5)  # SMELL-A-2818
value_6 = step(6)  # SMELL-A-3381
value_7 = step(7)  # SMELL-B-0226
value_8 = step(8)  # SMELL-B-0789
value_9 = step(9)  # SMELL-B-1352
value_10 = step(10)  # SMELL-B-1915
value_11 = step(11)  # SMELL-C-0259
value_12 = step(12)  # SMELL-C-0822

# end
