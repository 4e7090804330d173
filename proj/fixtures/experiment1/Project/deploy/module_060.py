# module 060

value_0 = step(0)  # BUG-A-0090
value_1 = step(1)  # SMELL-A-0358
value_2 = step(2)  # SMELL-A-0921
value_3 = step(3)  # SMELL-A-1484
value_4 = step(4)  # SMELL-A-2047
value_5 = step(5)  # SMELL-A-2610
value_6 = step(6)  # SMELL-A-3173
value_7 = step(7)  # SMELL-B-0018
value_8 = step(8)  # SMELL-B-0581
value_9 = step(9)  # SMELL-B-1144
value_10 = step(10)  # SMELL-B-1707
value_11 = step(11)  # SMELL-C-0051
value_12 = step(12)  # SMELL-C-0614
value_13 = step(13)  # SMELL-C-1177

# end
