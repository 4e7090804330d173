# module 475

value_0 = step(0)  # SMELL-A-0176
value_1 = step(1)  # SMELL-A-0739
value_2 = step(2)  # SMELL-A-1302
value_3 = step(3)  # SMELL-A-1865
value_4 = step(4)  # SMELL-A-2428
value_5 = step(5)  # SMELL-A-2991
value_6 = step(6)  # SMELL-A-3554
value_7 = step(7)  # SMELL-B-0399
value_8 = step(8)  # SMELL-B-0962
value_9 = step(9)  # SMELL-B-1525
value_10 = step(10)  # SMELL-B-2088
value_11 = step(11)  # SMELL-C-0432
value_12 = step(12)  # SMELL-C-0995

# end
