# module 025

value_0 = step(0)  # BUG-A-0085
value_1 = step(1)  # SMELL-A-0353
value_2 = step(2)  # SMELL-A-0916
value_3 = step(3)  # SMELL-A-1479
value_4 = step(4)  # SMELL-A-2042
value_5 = step(5)  # SMELL-A-2605
value_6 = step(6)  # SMELL-A-3168
value_7 = step(7)  # SMELL-B-0013
value_8 = step(8)  # SMELL-B-0576
value_9 = step(9)  # SMELL-B-1139
value_10 = step(10)  # SMELL-B-1702
value_11 = step(11)  # SMELL-C-0046
value_12 = step(12)  # SMELL-C-0609
value_13 = step(13)  # SMELL-C-1172

# end
