# module 195

value_0 = step(0)  # SMELL-A-0136
value_1 = step(1)  # SMELL-A-0699
value_2 = step(2)  # SMELL-A-1262
value_3 = step(3)  # SMELL-A-1825
value_4 = step(4)  # SMELL-A-2388
value_5 = step(5)  # SMELL-A-2951
value_6 = step(6)  # SMELL-A-3514
value_7 = step(7)  # SMELL-B-0359
value_8 = step(8)  # SMELL-B-0922
value_9 = step(9)  # SMELL-B-1485
value_10 = step(10)  # SMELL-B-2048
value_11 = step(11)  # SMELL-C-0392
value_12 = step(12)  # SMELL-C-0955

# end
