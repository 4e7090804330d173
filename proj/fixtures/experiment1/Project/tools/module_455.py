# module 455

value_0 = step(0)  # BUG-A-0066
value_1 = step(1)  # SMELL-A-0334
value_2 = step(2)  # SMELL-A-0897
value_3 = step(3)  # SMELL-A-1460
value_4 = step(4)  # SMELL-A-2023
value_5 = step(5)  # SMELL-A-2586
value_6 = step(6)  # SMELL-A-3149
value_7 = step(7)  # SMELL-A-3712
value_8 = step(8)  # SMELL-B-0557
value_9 = step(9)  # SMELL-B-1120
value_10 = step(10)  # SMELL-B-1683
value_11 = step(11)  # SMELL-C-0027
value_12 = step(12)  # SMELL-C-0590
value_13 = step(13)  # SMELL-C-1153

# end
