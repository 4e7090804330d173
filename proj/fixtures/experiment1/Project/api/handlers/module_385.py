# module 385

value_0 = step(0)  # BUG-A-0056
value_1 = step(1)  # SMELL-A-0324
value_2 = step(2)  # SMELL-A-0887
value_3 = step(3)  # SMELL-A-1450
value_4 = step(4)  # SMELL-A-2013
value_5 = step(5)  # SMELL-A-2576
value_6 = step(6)  # SMELL-A-3139
value_7 = step(7)  # SMELL-A-3702
value_8 = step(8)  # SMELL-B-0547
value_9 = step(9)  # SMELL-B-1110
value_10 = step(10)  # SMELL-B-1673
value_11 = step(11)  # SMELL-C-0017
value_12 = step(12)  # SMELL-C-0580
value_13 = step(13)  # SMELL-C-1143

# end
