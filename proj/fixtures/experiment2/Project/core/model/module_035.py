# module 035

value_0 = step(0)  # BUG-A-0006
value_1 = step(1)  # SMELL-A-0023
value_2 = step(2)  # SMELL-A-0063
value_3 = step(3)  # SMELL-A-0103
value_4 = step(4)  # SMELL-A-0143
value_5 = step(5)  # SMELL-A-0183
value_6 = step(6)  # SMELL-A-0223
value_7 = step(7)  # SMELL-A-0263
value_8 = step(8)  # SMELL-A-0303
value_9 = step(9)  # SMELL-A-0343
value_10 = step(10)  # SMELL-B-0014

# end
