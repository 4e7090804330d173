# module 435

value_0 = step(0)  # BUG-B-0107
value_1 = step(1)  # SMELL-A-0492
value_2 = step(2)  # SMELL-A-1055
value_3 = step(3)  # SMELL-A-1618
value_4 = step(4)  # SMELL-A-2181
value_5 = step(5)  # SMELL-A-2744
value_6 = step(6)  # SMELL-A-3307
value_7 = step(7)  # SMELL-B-0152
value_8 = step(8)  # SMELL-B-0715
value_9 = step(9)  # SMELL-B-1278
value_10 = step(10)  # SMELL-B-1841
value_11 = step(11)  # SMELL-C-0185
value_12 = step(12)  # SMELL-C-0748
value_13 = step(13)  # SMELL-C-1311

# end
