# module 550

value_0 = step(0)  # BUG-B-0043
value_1 = step(1)  # SMELL-A-0428
value_2 = step(2)  # SMELL-A-0991
value_3 = step(3)  # SMELL-A-1554
value_4 = step(4)  # SMELL-A-2117
value_5 = step(5)  # SMELL-A-2680
value_6 = step(6)  # SMELL-A-3243
value_7 = step(7)  # SMELL-B-0088
value_8 = step(8)  # SMELL-B-0651
value_9 = step(9)  # SMELL-B-1214
value_10 = step(10)  # SMELL-B-1777
value_11 = step(11)  # SMELL-C-0121
value_12 = step(12)  # SMELL-C-0684
value_13 = step(13)  # SMELL-C-1247

# end
