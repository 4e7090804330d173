# module 535

value_0 = step(0)  # SMELL-A-0265
value_1 = step(1)  # SMELL-A-0828
value_2 = step(2)  # SMELL-A-1391
value_3 = step(3)  # SMELL-A-1954
value_4 = step(4)  # SMELL-A-2517
value_5 = step(5)  # SMELL-A-3080
value_6 = step(6)  # SMELL-A-3643
value_7 = step(7)  # SMELL-B-0488
value_8 = step(8)  # SMELL-B-1051
value_9 = step(9)  # SMELL-B-1614
value_10 = step(10)  # SMELL-B-2177
value_11 = step(11)  # SMELL-C-0521
value_12 = step(12)  # SMELL-C-1084

# end
