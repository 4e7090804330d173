# module 010

value_0 = step(0)  # SMELL-A-0008
value_1 = step(1)  # SMELL-A-0048
value_2 = step(2)  # SMELL-A-0088
value_3 = step(3)  # SMELL-A-0128
value_4 = step(4)  # SMELL-A-0168
value_5 = step(5)  # SMELL-A-0208
value_6 = step(6)  # SMELL-A-0248
value_7 = step(7)  # SMELL-A-0288
value_8 = step(8)  # SMELL-A-0328
value_9 = step(9)  # SMELL-A-0368

# end
