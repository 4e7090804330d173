# module 200

value_0 = step(0)  # BUG-A-0110
value_1 = step(1)  # SMELL-A-0378
value_2 = step(2)  # SMELL-A-0941
value_3 = step(3)  # SMELL-A-1504
value_4 = step(4)  # SMELL-A-2067
value_5 = step(5)  # SMELL-A-2630
value_6 = step(6)  # SMELL-A-3193
value_7 = step(7)  # SMELL-B-0038
value_8 = step(8)  # SMELL-B-0601
value_9 = step(9)  # SMELL-B-1164
value_10 = step(10)  # SMELL-B-1727
value_11 = step(11)  # SMELL-C-0071
value_12 = step(12)  # SMELL-C-0634
value_13 = step(13)  # SMELL-C-1197

# end
