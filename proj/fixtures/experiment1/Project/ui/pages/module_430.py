# module 430

value_0 = step(0)  # SMELL-A-0250
value_1 = step(1)  # SMELL-A-0813
value_2 = step(2)  # SMELL-A-1376
value_3 = step(3)  # SMELL-A-1939
value_4 = step(4)  # SMELL-A-2502
value_5 = step(5)  # SMELL-A-3065
value_6 = step(6)  # SMELL-A-3628
value_7 = step(7)  # SMELL-B-0473
value_8 = step(8)  # SMELL-B-1036
value_9 = step(9)  # SMELL-B-1599
value_10 = step(10)  # SMELL-B-2162
value_11 = step(11)  # SMELL-C-0506
value_12 = step(12)  # SMELL-C-1069

# end
