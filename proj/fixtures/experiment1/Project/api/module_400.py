# module 400

value_0 = step(0)  # BUG-B-0102
value_1 = step(1)  # SMELL-A-0487
value_2 = step(2)  # SMELL-A-1050
value_3 = step(3)  # SMELL-A-1613
value_4 = step(4)  # SMELL-A-2176
value_5 = step(5)  # SMELL-A-2739
value_6 = step(6)  # SMELL-A-3302
value_7 = step(7)  # SMELL-B-0147
value_8 = step(8)  # SMELL-B-0710
value_9 = step(9)  # SMELL-B-1273
value_10 = step(10)  # SMELL-B-1836
value_11 = step(11)  # SMELL-C-0180
value_12 = step(12)  # SMELL-C-0743
value_13 = step(13)  # SMELL-C-1306

# end
