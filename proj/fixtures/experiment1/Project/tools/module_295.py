# module 295

value_0 = step(0)  # BUG-B-0087
value_1 = step(1)  # SMELL-A-0472
value_2 = step(2)  # SMELL-A-1035
value_3 = step(3)  # SMELL-A-1598
value_4 = step(4)  # SMELL-A-2161
value_5 = step(5)  # SMELL-A-2724
value_6 = step(6)  # SMELL-A-3287
value_7 = step(7)  # SMELL-B-0132
value_8 = step(8)  # SMELL-B-0695
value_9 = step(9)  # SMELL-B-1258
value_10 = step(10)  # SMELL-B-1821
value_11 = step(11)  # SMELL-C-0165
value_12 = step(12)  # SMELL-C-0728
value_13 = step(13)  # SMELL-C-1291

# end
