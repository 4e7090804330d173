# module 120

value_0 = step(0)  # BUG-B-0062
value_1 = step(1)  # SMELL-A-0447
value_2 = step(2)  # SMELL-A-1010
value_3 = step(3)  # SMELL-A-1573
value_4 = step(4)  # SMELL-A-2136
value_5 = step(5)  # SMELL-A-2699
value_6 = step(6)  # SMELL-A-3262
value_7 = step(7)  # SMELL-B-0107
value_8 = step(8)  # SMELL-B-0670
value_9 = step(9)  # SMELL-B-1233
value_10 = step(10)  # SMELL-B-1796
value_11 = step(11)  # SMELL-C-0140
value_12 = step(12)  # SMELL-C-0703
value_13 = step(13)  # SMELL-C-1266

# end
