# module 340

value_0 = step(0)  # BUG-B-0013
value_1 = step(1)  # SMELL-A-0398
value_2 = step(2)  # SMELL-A-0961
value_3 = step(3)  # SMELL-A-1524
value_4 = step(4)  # SMELL-A-2087
value_5 = step(5)  # SMELL-A-2650
value_6 = step(6)  # SMELL-A-3213
value_7 = step(7)  # SMELL-B-0058
value_8 = step(8)  # SMELL-B-0621
value_9 = step(9)  # SMELL-B-1184
value_10 = step(10)  # SMELL-B-1747
value_11 = step(11)  # SMELL-C-0091
value_12 = step(12)  # SMELL-C-0654
value_13 = step(13)  # SMELL-C-1217

# end
