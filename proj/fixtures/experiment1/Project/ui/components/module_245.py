# module 245

value_0 = step(0)  # BUG-A-0036
value_1 = step(1)  # SMELL-A-0304
value_2 = step(2)  # SMELL-A-0867
value_3 = step(3)  # SMELL-A-1430
value_4 = step(4)  # SMELL-A-1993
value_5 = step(5)  # SMELL-A-2556
value_6 = step(6)  # SMELL-A-3119
value_7 = step(7)  # SMELL-A-3682
value_8 = step(8)  # SMELL-B-0527
value_9 = step(9)  # SMELL-B-1090
value_10 = step(10)  # SMELL-B-1653
value_11 = step(11)  # SMELL-B-2216
value_12 = step(12)  # SMELL-C-0560
value_13 = step(13)  # SMELL-C-1123

# end
