# module 525

value_0 = step(0)  # BUG-A-0076
value_1 = step(1)  # SMELL-A-0344
value_2 = step(2)  # SMELL-A-0907
value_3 = step(3)  # SMELL-A-1470
value_4 = step(4)  # SMELL-A-2033
value_5 = step(5)  # SMELL-A-2596
value_6 = step(6)  # SMELL-A-3159
value_7 = step(7)  # SMELL-B-0004
value_8 = step(8)  # SMELL-B-0567
value_9 = step(9)  # SMELL-B-1130
value_10 = step(10)  # SMELL-B-1693
value_11 = step(11)  # SMELL-C-0037
value_12 = step(12)  # SMELL-C-0600
value_13 = step(13)  # SMELL-C-1163

# end
