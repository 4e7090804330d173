# module 000

value_0 = step(0)  # BUG-A-0001
value_1 = step(1)  # SMELL-A-0269
value_2 = step(2)  # SMELL-A-0832
value_3 = step(3)  # SMELL-A-1395
value_4 = step(4)  # SMELL-A-1958
value_5 = step(5)  # SMELL-A-2521
value_6 = step(6)  # SMELL-A-3084
value_7 = step(7)  # SMELL-A-3647
value_8 = step(8)  # SMELL-B-0492
value_9 = step(9)  # SMELL-B-1055
value_10 = step(10)  # SMELL-B-1618
value_11 = step(11)  # SMELL-B-2181
value_12 = step(12)  # SMELL-C-0525
value_13 = step(13)  # SMELL-C-1088

# end
