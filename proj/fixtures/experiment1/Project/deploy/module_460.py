# module 460

value_0 = step(0)  # SMELL-A-0013
value_1 = step(1)  # SMELL-A-0576
value_2 = step(2)  # SMELL-A-1139
value_3 = step(3)  # SMELL-A-1702
value_4 = step(4)  # SMELL-A-2265
value_5 = step(5)  # SMELL-A-2828
value_6 = step(6)  # SMELL-A-3391
value_7 = step(7)  # SMELL-B-0236
value_8 = step(8)  # SMELL-B-0799
value_9 = step(9)  # SMELL-B-1362
value_10 = step(10)  # SMELL-B-1925
value_11 = step(11)  # SMELL-C-0269
value_12 = step(12)  # SMELL-C-0832

# end
