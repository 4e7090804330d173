# module 220

value_0 = step(0)  # SMELL-A-0220
value_1 = step(1)  # SMELL-A-0783
value_2 = step(2)  # SMELL-A-1346
value_3 = step(3)  # SMELL-A-1909
value_4 = step(4)  # SMELL-A-2472
value_5 = step(5)  # SMELL-A-3035
value_6 = step(6)  # SMELL-A-3598
value_7 = step(7)  # SMELL-B-0443
value_8 = step(8)  # SMELL-B-1006
value_9 = step(9)  # SMELL-B-1569
value_10 = step(10)  # SMELL-B-2132
value_11 = step(11)  # SMELL-C-0476
value_12 = step(12)  # SMELL-C-1039

# end
