# module 425

value_0 = step(0)  # SMELL-A-0008
value_1 = step(1)  # SMELL-A-0571
value_2 = step(2)  # SMELL-A-1134
value_3 = step(3)  # SMELL-A-1697
value_4 = step(4)  # SMELL-A-2260
value_5 = step(5)  # SMELL-A-2823
value_6 = step(6)  # SMELL-A-3386
value_7 = step(7)  # SMELL-B-0231
value_8 = step(8)  # SMELL-B-0794
value_9 = step(9)  # SMELL-B-1357
value_10 = step(10)  # SMELL-B-1920
value_11 = step(11)  # SMELL-C-0264
value_12 = step(12)  # SMELL-C-0827

# end
