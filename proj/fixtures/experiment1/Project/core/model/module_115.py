# module 115

value_0 = step(0)  # SMELL-A-0205
value_1 = step(1)  # SMELL-A-0768
value_2 = step(2)  # SMELL-A-1331
value_3 = step(3)  # SMELL-A-1894
value_4 = step(4)  # SMELL-A-2457
value_5 = step(5)  # SMELL-A-3020
value_6 = step(6)  # SMELL-A-3583
value_7 = step(7)  # SMELL-B-0428
value_8 = step(8)  # SMELL-B-0991
value_9 = step(9)  # SMELL-B-1554
value_10 = step(10)  # SMELL-B-2117
value_11 = step(11)  # SMELL-C-0461
value_12 = step(12)  # SMELL-C-1024

# end
