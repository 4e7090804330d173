# module 505

value_0 = step(0)  # BUG-B-0117
value_1 = step(1)  # SMELL-A-0502
value_2 = step(2)  # SMELL-A-1065
value_3 = step(3)  # SMELL-A-1628
value_4 = step(4)  # SMELL-A-2191
value_5 = step(5)  # SMELL-A-2754
value_6 = step(6)  # SMELL-A-3317
value_7 = step(7)  # SMELL-B-0162
value_8 = step(8)  # SMELL-B-0725
value_9 = step(9)  # SMELL-B-1288
value_10 = step(10)  # SMELL-B-1851
value_11 = step(11)  # SMELL-C-0195
value_12 = step(12)  # SMELL-C-0758
value_13 = step(13)  # SMELL-C-1321

# end
