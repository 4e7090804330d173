# module 285

value_0 = step(0)  # VULN-A-0049
value_1 = step(1)  # SMELL-A-0551
value_2 = step(2)  # SMELL-A-1114
value_3 = step(3)  # SMELL-A-1677
value_4 = step(4)  # SMELL-A-2240
value_5 = step(5)  # SMELL-A-2803
value_6 = step(6)  # SMELL-A-3366
value_7 = step(7)  # SMELL-B-0211
value_8 = step(8)  # SMELL-B-0774
value_9 = step(9)  # SMELL-B-1337
value_10 = step(10)  # SMELL-B-1900
value_11 = step(11)  # SMELL-C-0244
value_12 = step(12)  # SMELL-C-0807

# end
