# module 560

value_0 = step(0)  # BUG-A-0081
value_1 = step(1)  # SMELL-A-0349
value_2 = step(2)  # SMELL-A-0912
value_3 = step(3)  # SMELL-A-1475
value_4 = step(4)  # SMELL-A-2038
value_5 = step(5)  # SMELL-A-2601
value_6 = step(6)  # SMELL-A-3164
value_7 = step(7)  # SMELL-B-0009
value_8 = step(8)  # SMELL-B-0572
value_9 = step(9)  # SMELL-B-1135
value_10 = step(10)  # SMELL-B-1698
value_11 = step(11)  # SMELL-C-0042
value_12 = step(12)  # SMELL-C-0605
value_13 = step(13)  # SMELL-C-1168

# end
