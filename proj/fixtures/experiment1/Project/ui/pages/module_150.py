# module 150

value_0 = step(0)  # SMELL-A-0210
value_1 = step(1)  # SMELL-A-0773
value_2 = step(2)  # SMELL-A-1336
value_3 = step(3)  # SMELL-A-1899
value_4 = step(4)  # SMELL-A-2462
value_5 = step(5)  # SMELL-A-3025
value_6 = step(6)  # SMELL-A-3588
value_7 = step(7)  # SMELL-B-0433
value_8 = step(8)  # SMELL-B-0996
value_9 = step(9)  # SMELL-B-1559
value_10 = step(10)  # SMELL-B-2122
value_11 = step(11)  # SMELL-C-0466
value_12 = step(12)  # SMELL-C-1029

# end
