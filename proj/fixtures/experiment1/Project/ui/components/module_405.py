# module 405

value_0 = step(0)  # SMELL-A-0166
value_1 = step(1)  # SMELL-A-0729
value_2 = step(2)  # SMELL-A-1292
value_3 = step(3)  # SMELL-A-1855
value_4 = step(4)  # SMELL-A-2418
value_5 = step(5)  # SMELL-A-2981
value_6 = step(6)  # SMELL-A-3544
value_7 = step(7)  # SMELL-B-0389
value_8 = step(8)  # SMELL-B-0952
value_9 = step(9)  # SMELL-B-1515
value_10 = step(10)  # SMELL-B-2078
value_11 = step(11)  # SMELL-C-0422
value_12 = step(12)  # SMELL-C-0985

# end
