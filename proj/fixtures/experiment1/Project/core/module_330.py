# module 330

value_0 = step(0)  # BUG-B-0092
value_1 = step(1)  # SMELL-A-0477
value_2 = step(2)  # SMELL-A-1040
value_3 = step(3)  # SMELL-A-1603
value_4 = step(4)  # SMELL-A-2166
value_5 = step(5)  # SMELL-A-2729
value_6 = step(6)  # SMELL-A-3292
value_7 = step(7)  # SMELL-B-0137
value_8 = step(8)  # SMELL-B-0700
value_9 = step(9)  # SMELL-B-1263
value_10 = step(10)  # SMELL-B-1826
value_11 = step(11)  # SMELL-C-0170
value_12 = step(12)  # SMELL-C-0733
value_13 = step(13)  # SMELL-C-1296

# end
