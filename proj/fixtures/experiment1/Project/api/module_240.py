# module 240

value_0 = step(0)  # SMELL-A-0062
value_1 = step(1)  # SMELL-A-0625
value_2 = step(2)  # SMELL-A-1188
value_3 = step(3)  # SMELL-A-1751
value_4 = step(4)  # SMELL-A-2314
value_5 = step(5)  # SMELL-A-2877
value_6 = step(6)  # SMELL-A-3440
value_7 = step(7)  # SMELL-B-0285
value_8 = step(8)  # SMELL-B-0848
value_9 = step(9)  # SMELL-B-1411
value_10 = step(10)  # SMELL-B-1974
value_11 = step(11)  # SMELL-C-0318
value_12 = step(12)  # SMELL-C-0881

# end
