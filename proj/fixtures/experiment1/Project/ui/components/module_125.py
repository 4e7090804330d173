# module 125

value_0 = step(0)  # SMELL-A-0126
value_1 = step(1)  # SMELL-A-0689
value_2 = step(2)  # SMELL-A-1252
value_3 = step(3)  # SMELL-A-1815
value_4 = step(4)  # SMELL-A-2378
value_5 = step(5)  # SMELL-A-2941
value_6 = step(6)  # SMELL-A-3504
value_7 = step(7)  # SMELL-B-0349
value_8 = step(8)  # SMELL-B-0912
value_9 = step(9)  # SMELL-B-1475
value_10 = step(10)  # SMELL-B-2038
value_11 = step(11)  # SMELL-C-0382
value_12 = step(12)  # SMELL-C-0945

# end
