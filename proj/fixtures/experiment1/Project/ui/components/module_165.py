# module 165

value_0 = step(0)  # BUG-A-0105
value_1 = step(1)  # SMELL-A-0373
value_2 = step(2)  # SMELL-A-0936
value_3 = step(3)  # SMELL-A-1499
value_4 = step(4)  # SMELL-A-2062
value_5 = step(5)  # SMELL-A-2625
value_6 = step(6)  # SMELL-A-3188
value_7 = step(7)  # SMELL-B-0033
value_8 = step(8)  # SMELL-B-0596
value_9 = step(9)  # SMELL-B-1159
value_10 = step(10)  # SMELL-B-1722
value_11 = step(11)  # SMELL-C-0066
value_12 = step(12)  # SMELL-C-0629
value_13 = step(13)  # SMELL-C-1192

# end
