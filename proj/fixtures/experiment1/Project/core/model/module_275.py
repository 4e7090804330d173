# module 275

value_0 = step(0)  # SMELL-A-0067
value_1 = step(1)  # SMELL-A-0630
value_2 = step(2)  # SMELL-A-1193
value_3 = step(3)  # SMELL-A-1756
value_4 = step(4)  # SMELL-A-2319
value_5 = step(5)  # SMELL-A-2882
value_6 = step(6)  # SMELL-A-3445
value_7 = step(7)  # SMELL-B-0290
value_8 = step(8)  # SMELL-B-0853
value_9 = step(9)  # SMELL-B-1416
value_10 = step(10)  # SMELL-B-1979
value_11 = step(11)  # SMELL-C-0323
value_12 = step(12)  # SMELL-C-0886

# end
