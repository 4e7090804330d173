# module 315

value_0 = step(0)  # BUG-A-0046
value_1 = step(1)  # SMELL-A-0314
value_2 = step(2)  # SMELL-A-0877
value_3 = step(3)  # SMELL-A-1440
value_4 = step(4)  # SMELL-A-2003
value_5 = step(5)  # SMELL-A-2566
value_6 = step(6)  # SMELL-A-3129
value_7 = step(7)  # SMELL-A-3692
value_8 = step(8)  # SMELL-B-0537
value_9 = step(9)  # SMELL-B-1100
value_10 = step(10)  # SMELL-B-1663
value_11 = step(11)  # SMELL-C-0007
value_12 = step(12)  # SMELL-C-0570
value_13 = step(13)  # SMELL-C-1133

# end
