# module 480

value_0 = step(0)  # BUG-B-0033
value_1 = step(1)  # SMELL-A-0418
value_2 = step(2)  # SMELL-A-0981
value_3 = step(3)  # SMELL-A-1544
value_4 = step(4)  # SMELL-A-2107
value_5 = step(5)  # SMELL-A-2670
value_6 = step(6)  # SMELL-A-3233
value_7 = step(7)  # SMELL-B-0078
value_8 = step(8)  # SMELL-B-0641
value_9 = step(9)  # SMELL-B-1204
value_10 = step(10)  # SMELL-B-1767
value_11 = step(11)  # SMELL-C-0111
value_12 = step(12)  # SMELL-C-0674
value_13 = step(13)  # SMELL-C-1237

# end
