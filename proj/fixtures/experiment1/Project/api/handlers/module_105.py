# module 105

value_0 = step(0)  # BUG-A-0016
value_1 = step(1)  # SMELL-A-0284
value_2 = step(2)  # SMELL-A-0847
value_3 = step(3)  # SMELL-A-1410
value_4 = step(4)  # SMELL-A-1973
value_5 = step(5)  # SMELL-A-2536
value_6 = step(6)  # SMELL-A-3099
value_7 = step(7)  # SMELL-A-3662
value_8 = step(8)  # SMELL-B-0507
value_9 = step(9)  # SMELL-B-1070
value_10 = step(10)  # SMELL-B-1633
value_11 = step(11)  # SMELL-B-2196
value_12 = step(12)  # SMELL-C-0540
value_13 = step(13)  # SMELL-C-1103

# end
