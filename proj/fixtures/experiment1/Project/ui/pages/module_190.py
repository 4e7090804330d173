# module 190

value_0 = step(0)  # BUG-B-0072
value_1 = step(1)  # SMELL-A-0457
value_2 = step(2)  # SMELL-A-1020
value_3 = step(3)  # SMELL-A-1583
value_4 = step(4)  # SMELL-A-2146
value_5 = step(5)  # SMELL-A-2709
value_6 = step(6)  # SMELL-A-3272
value_7 = step(7)  # SMELL-B-0117
value_8 = step(8)  # SMELL-B-0680
value_9 = step(9)  # SMELL-B-1243
value_10 = step(10)  # SMELL-B-1806
value_11 = step(11)  # SMELL-C-0150
value_12 = step(12)  # SMELL-C-0713
value_13 = step(13)  # SMELL-C-1276

# end
