# module 040

value_0 = step(0)  # VULN-A-0014
value_1 = step(1)  # SMELL-A-0516
value_2 = step(2)  # SMELL-A-1079
value_3 = step(3)  # SMELL-A-1642
value_4 = step(4)  # SMELL-A-2205
value_5 = step(5)  # SMELL-A-2768
value_6 = step(6)  # SMELL-A-3331
value_7 = step(7)  # SMELL-B-0176
value_8 = step(8)  # SMELL-B-0739
value_9 = step(9)  # SMELL-B-1302
value_10 = step(10)  # SMELL-B-1865
value_11 = step(11)  # SMELL-C-0209
value_12 = step(12)  # SMELL-C-0772
value_13 = step(13)  # SMELL-C-1335

# end
