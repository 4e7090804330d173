# module 030

value_0 = step(0)  # BUG-A-0011
value_1 = step(1)  # SMELL-A-0028
value_2 = step(2)  # SMELL-A-0068
value_3 = step(3)  # SMELL-A-0108
value_4 = step(4)  # SMELL-A-0148
value_5 = step(5)  # SMELL-A-0188
value_6 = step(6)  # SMELL-A-0228
value_7 = step(7)  # SMELL-A-0268
value_8 = step(8)  # SMELL-A-0308
value_9 = step(9)  # SMELL-A-0348
value_10 = step(10)  # SMELL-B-0019

# end
