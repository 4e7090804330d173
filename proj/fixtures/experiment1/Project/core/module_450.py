# module 450

value_0 = step(0)  # SMELL-A-0092
value_1 = step(1)  # SMELL-A-0655
value_2 = step(2)  # SMELL-A-1218
value_3 = step(3)  # SMELL-A-1781
value_4 = step(4)  # SMELL-A-2344
value_5 = step(5)  # SMELL-A-2907
value_6 = step(6)  # SMELL-A-3470
value_7 = step(7)  # SMELL-B-0315
value_8 = step(8)  # SMELL-B-0878
value_9 = step(9)  # SMELL-B-1441
value_10 = step(10)  # SMELL-B-2004
value_11 = step(11)  # SMELL-C-0348
value_12 = step(12)  # SMELL-C-0911

# end
