# module 025

value_0 = step(0)  # BUG-A-0016
value_1 = step(1)  # SMELL-A-0033
value_2 = step(2)  # SMELL-A-0073
value_3 = step(3)  # SMELL-A-0113
value_4 = step(4)  # SMELL-A-0153
value_5 = step(5)  # SMELL-A-0193
value_6 = step(6)  # SMELL-A-0233
value_7 = step(7)  # SMELL-A-0273
value_8 = step(8)  # SMELL-A-0313
value_9 = step(9)  # SMELL-A-0353
value_10 = step(10)  # SMELL-B-0024

# end
