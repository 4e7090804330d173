# module 360

value_0 = step(0)  # SMELL-A-0240
value_1 = step(1)  # SMELL-A-0803
value_2 = step(2)  # SMELL-A-1366
value_3 = step(3)  # SMELL-A-1929
value_4 = step(4)  # SMELL-A-2492
value_5 = step(5)  # SMELL-A-3055
value_6 = step(6)  # SMELL-A-3618
value_7 = step(7)  # SMELL-B-0463
value_8 = step(8)  # SMELL-B-1026
value_9 = step(9)  # SMELL-B-1589
value_10 = step(10)  # SMELL-B-2152
value_11 = step(11)  # SMELL-C-0496
value_12 = step(12)  # SMELL-C-1059

# end
