# module 230

value_0 = step(0)  # SMELL-A-0141
value_1 = step(1)  # SMELL-A-0704
value_2 = step(2)  # SMELL-A-1267
value_3 = step(3)  # SMELL-A-1830
value_4 = step(4)  # SMELL-A-2393
value_5 = step(5)  # SMELL-A-2956
value_6 = step(6)  # SMELL-A-3519
value_7 = step(7)  # SMELL-B-0364
value_8 = step(8)  # SMELL-B-0927
value_9 = step(9)  # SMELL-B-1490
value_10 = step(10)  # SMELL-B-2053
value_11 = step(11)  # SMELL-C-0397
value_12 = step(12)  # SMELL-C-0960

# end
