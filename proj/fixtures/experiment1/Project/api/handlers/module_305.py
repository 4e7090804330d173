# module 305

value_0 = step(0)  # BUG-B-0008
value_1 = step(1)  # SMELL-A-0393
value_2 = step(2)  # SMELL-A-0956
value_3 = step(3)  # SMELL-A-1519
value_4 = step(4)  # SMELL-A-2082
value_5 = step(5)  # SMELL-A-2645
value_6 = step(6)  # SMELL-A-3208
value_7 = step(7)  # SMELL-B-0053
value_8 = step(8)  # SMELL-B-0616
value_9 = step(9)  # SMELL-B-1179
value_10 = step(10)  # SMELL-B-1742
value_11 = step(11)  # SMELL-C-0086
value_12 = step(12)  # SMELL-C-0649
value_13 = step(13)  # SMELL-C-1212

# end
