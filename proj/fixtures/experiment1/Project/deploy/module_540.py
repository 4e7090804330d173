# module 540

value_0 = step(0)  # VULN-A-0005
value_1 = step(1)  # SMELL-A-0507
value_2 = step(2)  # SMELL-A-1070
value_3 = step(3)  # SMELL-A-1633
value_4 = step(4)  # SMELL-A-2196
value_5 = step(5)  # SMELL-A-2759
value_6 = step(6)  # SMELL-A-3322
value_7 = step(7)  # SMELL-B-0167
value_8 = step(8)  # SMELL-B-0730
value_9 = step(9)  # SMELL-B-1293
value_10 = step(10)  # SMELL-B-1856
value_11 = step(11)  # SMELL-C-0200
value_12 = step(12)  # SMELL-C-0763
value_13 = step(13)  # SMELL-C-1326

# end
