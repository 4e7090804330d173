# module 325

value_0 = step(0)  # SMELL-A-0235
value_1 = step(1)  # SMELL-A-0798
value_2 = step(2)  # SMELL-A-1361
value_3 = step(3)  # SMELL-A-1924
value_4 = step(4)  # SMELL-A-2487
value_5 = step(5)  # SMELL-A-3050
value_6 = step(6)  # SMELL-A-3613
value_7 = step(7)  # SMELL-B-0458
value_8 = step(8)  # SMELL-B-1021
value_9 = step(9)  # SMELL-B-1584
value_10 = step(10)  # SMELL-B-2147
value_11 = step(11)  # SMELL-C-0491
value_12 = step(12)  # SMELL-C-1054

# end
