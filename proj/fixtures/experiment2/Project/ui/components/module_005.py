# module 005

value_0 = step(0)  # SMELL-A-0013
value_1 = step(1)  # SMELL-A-0053
value_2 = step(2)  # SMELL-A-0093
value_3 = step(3)  # SMELL-A-0133
value_4 = step(4)  # SMELL-A-0173
value_5 = step(5)  # SMELL-A-0213
value_6 = step(6)  # SMELL-A-0253
value_7 = step(7)  # SMELL-A-0293
value_8 = step(8)  # SMELL-A-0333
value_9 = step(9)  # SMELL-B-0004

# end
