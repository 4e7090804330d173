# module 035

value_0 = step(0)  # BUG-A-0006
value_1 = step(1)  # SMELL-A-0274
value_2 = step(2)  # SMELL-A-0837
value_3 = step(3)  # SMELL-A-1400
value_4 = step(4)  # SMELL-A-1963
value_5 = step(5)  # SMELL-A-2526
value_6 = step(6)  # SMELL-A-3089
value_7 = step(7)  # SMELL-A-3652
value_8 = step(8)  # SMELL-B-0497
value_9 = step(9)  # SMELL-B-1060
value_10 = step(10)  # SMELL-B-1623
value_11 = step(11)  # SMELL-B-2186
value_12 = step(12)  # SMELL-C-0530
value_13 = step(13)  # SMELL-C-1093

# end
