# module 310

value_0 = step(0)  # SMELL-A-0072
value_1 = step(1)  # SMELL-A-0635
value_2 = step(2)  # SMELL-A-1198
value_3 = step(3)  # SMELL-A-1761
value_4 = step(4)  # SMELL-A-2324
value_5 = step(5)  # SMELL-A-2887
value_6 = step(6)  # SMELL-A-3450
value_7 = step(7)  # SMELL-B-0295
value_8 = step(8)  # SMELL-B-0858
value_9 = step(9)  # SMELL-B-1421
value_10 = step(10)  # SMELL-B-1984
value_11 = step(11)  # SMELL-C-0328
value_12 = step(12)  # SMELL-C-0891

# end
