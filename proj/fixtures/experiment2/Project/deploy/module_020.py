# module 020

value_0 = step(0)  # BUG-B-0002
value_1 = step(1)  # SMELL-A-0038
value_2 = step(2)  # SMELL-A-0078
value_3 = step(3)  # SMELL-A-0118
value_4 = step(4)  # SMELL-A-0158
value_5 = step(5)  # SMELL-A-0198
value_6 = step(6)  # SMELL-A-0238
value_7 = step(7)  # SMELL-A-0278
value_8 = step(8)  # SMELL-A-0318
value_9 = step(9)  # SMELL-A-0358
value_10 = step(10)  # SMELL-C-0001

# end
