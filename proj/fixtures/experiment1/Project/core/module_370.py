# module 370

value_0 = step(0)  # SMELL-A-0161
value_1 = step(1)  # SMELL-A-0724
value_2 = step(2)  # SMELL-A-1287
value_3 = step(3)  # SMELL-A-1850
value_4 = step(4)  # SMELL-A-2413
value_5 = step(5)  # SMELL-A-2976
value_6 = step(6)  # SMELL-A-3539
value_7 = step(7)  # SMELL-B-0384
value_8 = step(8)  # SMELL-B-0947
value_9 = step(9)  # SMELL-B-1510
value_10 = step(10)  # SMELL-B-2073
value_11 = step(11)  # SMELL-C-0417
value_12 = step(12)  # SMELL-C-0980

# end
