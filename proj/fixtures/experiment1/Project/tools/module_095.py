# module 095

value_0 = step(0)  # BUG-A-0095
value_1 = step(1)  # SMELL-A-0363
value_2 = step(2)  # SMELL-A-0926
value_3 = step(3)  # SMELL-A-1489
value_4 = step(4)  # SMELL-A-2052
value_5 = step(5)  # SMELL-A-2615
value_6 = step(6)  # SMELL-A-3178
value_7 = step(7)  # SMELL-B-0023
value_8 = step(8)  # SMELL-B-0586
value_9 = step(9)  # SMELL-B-1149
value_10 = step(10)  # SMELL-B-1712
value_11 = step(11)  # SMELL-C-0056
value_12 = step(12)  # SMELL-C-0619
value_13 = step(13)  # SMELL-C-1182

# end
