# module 515

value_0 = step(0)  # BUG-B-0038
value_1 = step(1)  # SMELL-A-0423
value_2 = step(2)  # SMELL-A-0986
value_3 = step(3)  # SMELL-A-1549
value_4 = step(4)  # SMELL-A-2112
value_5 = step(5)  # SMELL-A-2675
value_6 = step(6)  # SMELL-A-3238
value_7 = step(7)  # SMELL-B-0083
value_8 = step(8)  # SMELL-B-0646
value_9 = step(9)  # SMELL-B-1209
value_10 = step(10)  # SMELL-B-1772
value_11 = step(11)  # SMELL-C-0116
value_12 = step(12)  # SMELL-C-0679
value_13 = step(13)  # SMELL-C-1242

# end
