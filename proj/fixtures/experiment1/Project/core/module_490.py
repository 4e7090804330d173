# module 490

value_0 = step(0)  # BUG-A-0071
value_1 = step(1)  # SMELL-A-0339
value_2 = step(2)  # SMELL-A-0902
value_3 = step(3)  # SMELL-A-1465
value_4 = step(4)  # SMELL-A-2028
value_5 = step(5)  # SMELL-A-2591
value_6 = step(6)  # SMELL-A-3154
value_7 = step(7)  # SMELL-A-3717
value_8 = step(8)  # SMELL-B-0562
value_9 = step(9)  # SMELL-B-1125
value_10 = step(10)  # SMELL-B-1688
value_11 = step(11)  # SMELL-C-0032
value_12 = step(12)  # SMELL-C-0595
value_13 = step(13)  # SMELL-C-1158

# end
