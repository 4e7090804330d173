# module 350

value_0 = step(0)  # BUG-A-0051
value_1 = step(1)  # SMELL-A-0319
value_2 = step(2)  # SMELL-A-0882
value_3 = step(3)  # SMELL-A-1445
value_4 = step(4)  # SMELL-A-2008
value_5 = step(5)  # SMELL-A-2571
value_6 = step(6)  # SMELL-A-3134
value_7 = step(7)  # SMELL-A-3697
value_8 = step(8)  # SMELL-B-0542
value_9 = step(9)  # SMELL-B-1105
value_10 = step(10)  # SMELL-B-1668
value_11 = step(11)  # SMELL-C-0012
value_12 = step(12)  # SMELL-C-0575
value_13 = step(13)  # SMELL-C-1138

# end
