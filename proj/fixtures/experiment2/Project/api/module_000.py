# module 000

value_0 = step(0)  # BUG-A-0001
value_1 = step(1)  # SMELL-A-0018
value_2 = step(2)  # SMELL-A-0058
value_3 = step(3)  # SMELL-A-0098
value_4 = step(4)  # SMELL-A-0138
value_5 = step(5)  # SMELL-A-0178
value_6 = step(6)  # SMELL-A-0218
value_7 = step(7)  # SMELL-A-0258
value_8 = step(8)  # SMELL-A-0298
value_9 = step(9)  # SMELL-A-0338
value_10 = step(10)  # SMELL-B-0009

# end
