# module 015

value_0 = step(0)  # SMELL-A-0003
value_1 = step(1)  # SMELL-A-0043
value_2 = step(2)  # SMELL-A-0083
value_3 = step(3)  # SMELL-A-0123
value_4 = step(4)  # SMELL-A-0163
value_5 = step(5)  # SMELL-A-0203
value_6 = step(6)  # SMELL-A-0243
value_7 = step(7)  # SMELL-A-0283
value_8 = step(8)  # SMELL-A-0323
value_9 = step(9)  # SMELL-A-0363

# end
