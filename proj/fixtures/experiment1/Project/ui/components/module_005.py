# module 005

value_0 = step(0)  # VULN-A-0009
value_1 = step(1)  # SMELL-A-0511
value_2 = step(2)  # SMELL-A-1074
value_3 = step(3)  # SMELL-A-1637
value_4 = step(4)  # SMELL-A-2200
value_5 = step(5)  # SMELL-A-2763
value_6 = step(6)  # SMELL-A-3326
value_7 = step(7)  # SMELL-B-0171
value_8 = step(8)  # SMELL-B-0734
value_9 = step(9)  # SMELL-B-1297
value_10 = step(10)  # SMELL-B-1860
value_11 = step(11)  # SMELL-C-0204
value_12 = step(12)  # SMELL-C-0767
value_13 = step(13)  # SMELL-C-1330

# end
