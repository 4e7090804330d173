# module 500

value_0 = step(0)  # SMELL-A-0260
value_1 = step(1)  # SMELL-A-0823
value_2 = step(2)  # SMELL-A-1386
value_3 = step(3)  # SMELL-A-1949
value_4 = step(4)  # SMELL-A-2512
value_5 = step(5)  # SMELL-A-3075
value_6 = step(6)  # SMELL-A-3638
value_7 = step(7)  # SMELL-B-0483
value_8 = step(8)  # SMELL-B-1046
value_9 = step(9)  # SMELL-B-1609
value_10 = step(10)  # SMELL-B-2172
value_11 = step(11)  # SMELL-C-0516
value_12 = step(12)  # SMELL-C-1079

# end
