# module 335

value_0 = step(0)  # SMELL-A-0156
value_1 = step(1)  # SMELL-A-0719
value_2 = step(2)  # SMELL-A-1282
value_3 = step(3)  # SMELL-A-1845
value_4 = step(4)  # SMELL-A-2408
value_5 = step(5)  # SMELL-A-2971
value_6 = step(6)  # SMELL-A-3534
value_7 = step(7)  # SMELL-B-0379
value_8 = step(8)  # SMELL-B-0942
value_9 = step(9)  # SMELL-B-1505
value_10 = step(10)  # SMELL-B-2068
value_11 = step(11)  # SMELL-C-0412
value_12 = step(12)  # SMELL-C-0975

# end
