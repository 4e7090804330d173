# module 410

value_0 = step(0)  # BUG-B-0023
value_1 = step(1)  # SMELL-A-0408
value_2 = step(2)  # SMELL-A-0971
value_3 = step(3)  # SMELL-A-1534
value_4 = step(4)  # SMELL-A-2097
value_5 = step(5)  # SMELL-A-2660
value_6 = step(6)  # SMELL-A-3223
value_7 = step(7)  # SMELL-B-0068
value_8 = step(8)  # SMELL-B-0631
value_9 = step(9)  # SMELL-B-1194
value_10 = step(10)  # SMELL-B-1757
value_11 = step(11)  # SMELL-C-0101
value_12 = step(12)  # SMELL-C-0664
value_13 = step(13)  # SMELL-C-1227

# end
