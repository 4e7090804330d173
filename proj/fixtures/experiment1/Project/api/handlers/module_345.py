# module 345

value_0 = step(0)  # SMELL-A-0077
value_1 = step(1)  # SMELL-A-0640
value_2 = step(2)  # SMELL-A-1203
value_3 = step(3)  # SMELL-A-1766
value_4 = step(4)  # SMELL-A-2329
value_5 = step(5)  # SMELL-A-2892
value_6 = step(6)  # SMELL-A-3455
value_7 = step(7)  # SMELL-B-0300
value_8 = step(8)  # SMELL-B-0863
value_9 = step(9)  # SMELL-B-1426
value_10 = step(10)  # SMELL-B-1989
value_11 = step(11)  # SMELL-C-0333
value_12 = step(12)  # SMELL-C-0896

# end
