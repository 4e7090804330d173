# module 215

value_0 = step(0)  # VULN-A-0039
value_1 = step(1)  # SMELL-A-0541
value_2 = step(2)  # SMELL-A-1104
value_3 = step(3)  # SMELL-A-1667
value_4 = step(4)  # SMELL-A-2230
value_5 = step(5)  # SMELL-A-2793
value_6 = step(6)  # SMELL-A-3356
value_7 = step(7)  # SMELL-B-0201
value_8 = step(8)  # SMELL-B-0764
value_9 = step(9)  # SMELL-B-1327
value_10 = step(10)  # SMELL-B-1890
value_11 = step(11)  # SMELL-C-0234
value_12 = step(12)  # SMELL-C-0797
value_13 = step(13)  # SMELL-C-1360

# end
