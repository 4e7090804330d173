# module 365

value_0 = step(0)  # BUG-B-0097
value_1 = step(1)  # SMELL-A-0482
value_2 = step(2)  # SMELL-A-1045
value_3 = step(3)  # SMELL-A-1608
value_4 = step(4)  # SMELL-A-2171
value_5 = step(5)  # SMELL-A-2734
value_6 = step(6)  # SMELL-A-3297
value_7 = step(7)  # SMELL-B-0142
value_8 = step(8)  # SMELL-B-0705
value_9 = step(9)  # SMELL-B-1268
value_10 = step(10)  # SMELL-B-1831
value_11 = step(11)  # SMELL-C-0175
value_12 = step(12)  # SMELL-C-0738
value_13 = step(13)  # SMELL-C-1301

# end
