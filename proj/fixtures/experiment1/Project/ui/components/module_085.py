# module 085

value_0 = step(0)  # BUG-B-0057
value_1 = step(1)  # SMELL-A-0442
value_2 = step(2)  # SMELL-A-1005
value_3 = step(3)  # SMELL-A-1568
value_4 = step(4)  # SMELL-A-2131
value_5 = step(5)  # SMELL-A-2694
value_6 = step(6)  # SMELL-A-3257
value_7 = step(7)  # SMELL-B-0102
value_8 = step(8)  # SMELL-B-0665
value_9 = step(9)  # SMELL-B-1228
value_10 = step(10)  # SMELL-B-1791
value_11 = step(11)  # SMELL-C-0135
value_12 = step(12)  # SMELL-C-0698
value_13 = step(13)  # SMELL-C-1261

# end
