# module 015

value_0 = step(0)  # BUG-B-0047
value_1 = step(1)  # SMELL-A-0432
value_2 = step(2)  # SMELL-A-0995
value_3 = step(3)  # SMELL-A-1558
value_4 = step(4)  # SMELL-A-2121
value_5 = step(5)  # SMELL-A-2684
value_6 = step(6)  # SMELL-A-3247
value_7 = step(7)  # SMELL-B-0092
value_8 = step(8)  # SMELL-B-0655
value_9 = step(9)  # SMELL-B-1218
value_10 = step(10)  # SMELL-B-1781
value_11 = step(11)  # SMELL-C-0125
value_12 = step(12)  # SMELL-C-0688
value_13 = step(13)  # SMELL-C-1251

# end
