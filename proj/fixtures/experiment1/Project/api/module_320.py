# module 320

value_0 = step(0)  # VULN-A-0054
value_1 = step(1)  # SMELL-A-0556
value_2 = step(2)  # SMELL-A-1119
value_3 = step(3)  # SMELL-A-1682
value_4 = step(4)  # SMELL-A-2245
value_5 = step(5)  # SMELL-A-2808
value_6 = step(6)  # SMELL-A-3371
value_7 = step(7)  # SMELL-B-0216
value_8 = step(8)  # SMELL-B-0779
value_9 = step(9)  # SMELL-B-1342
value_10 = step(10)  # SMELL-B-1905
value_11 = step(11)  # SMELL-C-0249
value_12 = step(12)  # SMELL-C-0812

# end
