# module 270

value_0 = step(0)  # BUG-B-0003
value_1 = step(1)  # SMELL-A-0388
value_2 = step(2)  # SMELL-A-0951
value_3 = step(3)  # SMELL-A-1514
value_4 = step(4)  # SMELL-A-2077
value_5 = step(5)  # SMELL-A-2640
value_6 = step(6)  # SMELL-A-3203
value_7 = step(7)  # SMELL-B-0048
value_8 = step(8)  # SMELL-B-0611
value_9 = step(9)  # SMELL-B-1174
value_10 = step(10)  # SMELL-B-1737
value_11 = step(11)  # SMELL-C-0081
value_12 = step(12)  # SMELL-C-0644
value_13 = step(13)  # SMELL-C-1207

# end
