# module 180

value_0 = step(0)  # VULN-A-0034
value_1 = step(1)  # SMELL-A-0536
value_2 = step(2)  # SMELL-A-1099
value_3 = step(3)  # SMELL-A-1662
value_4 = step(4)  # SMELL-A-2225
value_5 = step(5)  # SMELL-A-2788
value_6 = step(6)  # SMELL-A-3351
value_7 = step(7)  # SMELL-B-0196
value_8 = step(8)  # SMELL-B-0759
value_9 = step(9)  # SMELL-B-1322
value_10 = step(10)  # SMELL-B-1885
value_11 = step(11)  # SMELL-C-0229
value_12 = step(12)  # SMELL-C-0792
value_13 = step(13)  # SMELL-C-1355

# end
