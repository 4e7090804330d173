# module 090

value_0 = step(0)  # SMELL-A-0121
value_1 = step(1)  # SMELL-A-0684
value_2 = step(2)  # SMELL-A-1247
value_3 = step(3)  # SMELL-A-1810
value_4 = step(4)  # SMELL-A-2373
value_5 = step(5)  # SMELL-A-2936
value_6 = step(6)  # SMELL-A-3499
value_7 = step(7)  # SMELL-B-0344
value_8 = step(8)  # SMELL-B-0907
value_9 = step(9)  # SMELL-B-1470
value_10 = step(10)  # SMELL-B-2033
value_11 = step(11)  # SMELL-C-0377
value_12 = step(12)  # SMELL-C-0940

# end
