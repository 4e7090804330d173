# module 255

value_0 = step(0)  # SMELL-A-0225
value_1 = step(1)  # SMELL-A-0788
value_2 = step(2)  # SMELL-A-1351
value_3 = step(3)  # SMELL-A-1914
value_4 = step(4)  # SMELL-A-2477
value_5 = step(5)  # SMELL-A-3040
value_6 = step(6)  # SMELL-A-3603
value_7 = step(7)  # SMELL-B-0448
value_8 = step(8)  # SMELL-B-1011
value_9 = step(9)  # SMELL-B-1574
value_10 = step(10)  # SMELL-B-2137
value_11 = step(11)  # SMELL-C-0481
value_12 = step(12)  # SMELL-C-1044

# end
