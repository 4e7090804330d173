# module 225

value_0 = step(0)  # BUG-B-0077
value_1 = step(1)  # SMELL-A-0462
value_2 = step(2)  # SMELL-A-1025
value_3 = step(3)  # SMELL-A-1588
value_4 = step(4)  # SMELL-A-2151
value_5 = step(5)  # SMELL-A-2714
value_6 = step(6)  # SMELL-A-3277
value_7 = step(7)  # SMELL-B-0122
value_8 = step(8)  # SMELL-B-0685
value_9 = step(9)  # SMELL-B-1248
value_10 = step(10)  # SMELL-B-1811
value_11 = step(11)  # SMELL-C-0155
value_12 = step(12)  # SMELL-C-0718
value_13 = step(13)  # SMELL-C-1281

# end
