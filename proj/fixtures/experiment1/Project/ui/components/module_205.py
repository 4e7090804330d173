# module 205

value_0 = step(0)  # SMELL-A-0057
value_1 = step(1)  # SMELL-A-0620
value_2 = step(2)  # SMELL-A-1183
value_3 = step(3)  # SMELL-A-1746
value_4 = step(4)  # SMELL-A-2309
value_5 = step(5)  # SMELL-A-2872
value_6 = step(6)  # SMELL-A-3435
value_7 = step(7)  # SMELL-B-0280
value_8 = step(8)  # SMELL-B-0843
value_9 = step(9)  # SMELL-B-1406
value_10 = step(10)  # SMELL-B-1969
value_11 = step(11)  # SMELL-C-0313
value_12 = step(12)  # SMELL-C-0876

# end
