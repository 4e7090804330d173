# module 465

value_0 = step(0)  # SMELL-A-0255
value_1 = step(1)  # SMELL-A-0818
value_2 = step(2)  # SMELL-A-1381
value_3 = step(3)  # SMELL-A-1944
value_4 = step(4)  # SMELL-A-2507
value_5 = step(5)  # SMELL-A-3070
value_6 = step(6)  # SMELL-A-3633
value_7 = step(7)  # SMELL-B-0478
value_8 = step(8)  # SMELL-B-1041
value_9 = step(9)  # SMELL-B-1604
value_10 = step(10)  # SMELL-B-2167
value_11 = step(11)  # SMELL-C-0511
value_12 = step(12)  # SMELL-C-1074

# end
