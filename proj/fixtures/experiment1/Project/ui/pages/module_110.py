# module 110

value_0 = step(0)  # VULN-A-0024
value_1 = step(1)  # SMELL-A-0526
value_2 = step(2)  # SMELL-A-1089
value_3 = step(3)  # SMELL-A-1652
value_4 = step(4)  # SMELL-A-2215
value_5 = step(5)  # SMELL-A-2778
value_6 = step(6)  # SMELL-A-3341
value_7 = step(7)  # SMELL-B-0186
value_8 = step(8)  # SMELL-B-0749
value_9 = step(9)  # SMELL-B-1312
value_10 = step(10)  # SMELL-B-1875
value_11 = step(11)  # SMELL-C-0219
value_12 = step(12)  # SMELL-C-0782
value_13 = step(13)  # SMELL-C-1345

# end
