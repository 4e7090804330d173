# module 250

value_0 = step(0)  # VULN-A-0044
value_1 = step(1)  # SMELL-A-0546
value_2 = step(2)  # SMELL-A-1109
value_3 = step(3)  # SMELL-A-1672
value_4 = step(4)  # SMELL-A-2235
value_5 = step(5)  # SMELL-A-2798
value_6 = step(6)  # SMELL-A-3361
value_7 = step(7)  # SMELL-B-0206
value_8 = step(8)  # SMELL-B-0769
value_9 = step(9)  # SMELL-B-1332
value_10 = step(10)  # SMELL-B-1895
value_11 = step(11)  # SMELL-C-0239
value_12 = step(12)  # SMELL-C-0802
value_13 = step(13)  # SMELL-C-1365

# end
