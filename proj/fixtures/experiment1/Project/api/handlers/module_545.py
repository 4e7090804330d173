# module 545

value_0 = step(0)  # SMELL-A-0186
value_1 = step(1)  # SMELL-A-0749
value_2 = step(2)  # SMELL-A-1312
value_3 = step(3)  # SMELL-A-1875
value_4 = step(4)  # SMELL-A-2438
value_5 = step(5)  # SMELL-A-3001
value_6 = step(6)  # SMELL-A-3564
value_7 = step(7)  # SMELL-B-0409
value_8 = step(8)  # SMELL-B-0972
value_9 = step(9)  # SMELL-B-1535
value_10 = step(10)  # SMELL-B-2098
value_11 = step(11)  # SMELL-C-0442
value_12 = step(12)  # SMELL-C-1005

# end
