# module 175

value_0 = step(0)  # BUG-A-0026
value_1 = step(1)  # SMELL-A-0294
value_2 = step(2)  # SMELL-A-0857
value_3 = step(3)  # SMELL-A-1420
value_4 = step(4)  # SMELL-A-1983
value_5 = step(5)  # SMELL-A-2546
value_6 = step(6)  # SMELL-A-3109
value_7 = step(7)  # SMELL-A-3672
value_8 = step(8)  # SMELL-B-0517
value_9 = step(9)  # SMELL-B-1080
value_10 = step(10)  # SMELL-B-1643
value_11 = step(11)  # SMELL-B-2206
value_12 = step(12)  # SMELL-C-0550
value_13 = step(13)  # SMELL-C-1113

# end
