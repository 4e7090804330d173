# module 375

value_0 = step(0)  # BUG-B-0018
value_1 = step(1)  # SMELL-A-0403
value_2 = step(2)  # SMELL-A-0966
value_3 = step(3)  # SMELL-A-1529
value_4 = step(4)  # SMELL-A-2092
value_5 = step(5)  # SMELL-A-2655
value_6 = step(6)  # SMELL-A-3218
value_7 = step(7)  # SMELL-B-0063
value_8 = step(8)  # SMELL-B-0626
value_9 = step(9)  # SMELL-B-1189
value_10 = step(10)  # SMELL-B-1752
value_11 = step(11)  # SMELL-C-0096
value_12 = step(12)  # SMELL-C-0659
value_13 = step(13)  # SMELL-C-1222

# end
