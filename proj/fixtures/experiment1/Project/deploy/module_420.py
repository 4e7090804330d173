# module 420

value_0 = step(0)  # BUG-A-0061
value_1 = step(1)  # SMELL-A-0329
value_2 = step(2)  # SMELL-A-0892
value_3 = step(3)  # SMELL-A-1455
value_4 = step(4)  # SMELL-A-2018
value_5 = step(5)  # SMELL-A-2581
value_6 = step(6)  # SMELL-A-3144
value_7 = step(7)  # SMELL-A-3707
value_8 = step(8)  # SMELL-B-0552
value_9 = step(9)  # SMELL-B-1115
value_10 = step(10)  # SMELL-B-1678
value_11 = step(11)  # SMELL-C-0022
value_12 = step(12)  # SMELL-C-0585
value_13 = step(13)  # SMELL-C-1148

# end
