# module 080

value_0 = step(0)  # SMELL-A-0200
value_1 = step(1)  # SMELL-A-0763
value_2 = step(2)  # SMELL-A-1326
value_3 = step(3)  # SMELL-A-1889
value_4 = step(4)  # SMELL-A-2452
value_5 = step(5)  # SMELL-A-3015
value_6 = step(6)  # SMELL-A-3578
value_7 = step(7)  # SMELL-B-0423
value_8 = step(8)  # SMELL-B-0986
value_9 = step(9)  # SMELL-B-1549
value_10 = step(10)  # SMELL-B-2112
value_11 = step(11)  # SMELL-C-0456
value_12 = step(12)  # SMELL-C-1019

# end
