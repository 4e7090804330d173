# module 530

value_0 = step(0)  # SMELL-A-0023
value_1 = step(1)  # SMELL-A-0586
value_2 = step(2)  # SMELL-A-1149
value_3 = step(3)  # SMELL-A-1712
value_4 = step(4)  # SMELL-A-2275
value_5 = step(5)  # SMELL-A-2838
value_6 = step(6)  # SMELL-A-3401
value_7 = step(7)  # SMELL-B-0246
value_8 = step(8)  # SMELL-B-0809
value_9 = step(9)  # SMELL-B-1372
value_10 = step(10)  # SMELL-B-1935
value_11 = step(11)  # SMELL-C-0279
value_12 = step(12)  # SMELL-C-0842

# end
