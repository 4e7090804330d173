# module 045

value_0 = step(0)  # SMELL-A-0195
value_1 = step(1)  # SMELL-A-0758
value_2 = step(2)  # SMELL-A-1321
value_3 = step(3)  # SMELL-A-1884
value_4 = step(4)  # SMELL-A-2447
value_5 = step(5)  # SMELL-A-3010
value_6 = step(6)  # SMELL-A-3573
value_7 = step(7)  # SMELL-B-0418
value_8 = step(8)  # SMELL-B-0981
value_9 = step(9)  # SMELL-B-1544
value_10 = step(10)  # SMELL-B-2107
value_11 = step(11)  # SMELL-C-0451
value_12 = step(12)  # SMELL-C-1014

# end
