# module 135

value_0 = step(0)  # SMELL-A-0047
value_1 = step(1)  # SMELL-A-0610
value_2 = step(2)  # SMELL-A-1173
value_3 = step(3)  # SMELL-A-1736
value_4 = step(4)  # SMELL-A-2299
value_5 = step(5)  # SMELL-A-2862
value_6 = step(6)  # SMELL-A-3425
value_7 = step(7)  # SMELL-B-0270
value_8 = step(8)  # SMELL-B-0833
value_9 = step(9)  # SMELL-B-1396
value_10 = step(10)  # SMELL-B-1959
value_11 = step(11)  # SMELL-C-0303
value_12 = step(12)  # SMELL-C-0866

# end
