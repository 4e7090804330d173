# module 155

value_0 = step(0)  # BUG-B-0067
value_1 = step(1)  # SMELL-A-0452
value_2 = step(2)  # SMELL-A-1015
value_3 = step(3)  # SMELL-A-1578
value_4 = step(4)  # SMELL-A-2141
value_5 = step(5)  # SMELL-A-2704
value_6 = step(6)  # SMELL-A-3267
value_7 = step(7)  # SMELL-B-0112
value_8 = step(8)  # SMELL-B-0675
value_9 = step(9)  # SMELL-B-1238
value_10 = step(10)  # SMELL-B-1801
value_11 = step(11)  # SMELL-C-0145
value_12 = step(12)  # SMELL-C-0708
value_13 = step(13)  # SMELL-C-1271

# end
