# module 145

value_0 = step(0)  # VULN-A-0029
value_1 = step(1)  # SMELL-A-0531
value_2 = step(2)  # SMELL-A-1094
value_3 = step(3)  # SMELL-A-1657
value_4 = step(4)  # SMELL-A-2220
value_5 = step(5)  # SMELL-A-2783
value_6 = step(6)  # SMELL-A-3346
value_7 = step(7)  # SMELL-B-0191
value_8 = step(8)  # SMELL-B-0754
value_9 = step(9)  # SMELL-B-1317
value_10 = step(10)  # SMELL-B-1880
value_11 = step(11)  # SMELL-C-0224
value_12 = step(12)  # SMELL-C-0787
value_13 = step(13)  # SMELL-C-1350

# end
