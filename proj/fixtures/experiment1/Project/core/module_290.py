# module 290

value_0 = step(0)  # SMELL-A-0230
value_1 = step(1)  # SMELL-A-0793
value_2 = step(2)  # SMELL-A-1356
value_3 = step(3)  # SMELL-A-1919
value_4 = step(4)  # SMELL-A-2482
value_5 = step(5)  # SMELL-A-3045
value_6 = step(6)  # SMELL-A-3608
value_7 = step(7)  # SMELL-B-0453
value_8 = step(8)  # SMELL-B-1016
value_9 = step(9)  # SMELL-B-1579
value_10 = step(10)  # SMELL-B-2142
value_11 = step(11)  # SMELL-C-0486
value_12 = step(12)  # SMELL-C-1049

# end
