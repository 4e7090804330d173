# module 510

value_0 = step(0)  # SMELL-A-0181
value_1 = step(1)  # SMELL-A-0744
value_2 = step(2)  # SMELL-A-1307
value_3 = step(3)  # SMELL-A-1870
value_4 = step(4)  # SMELL-A-2433
value_5 = step(5)  # SMELL-A-2996
value_6 = step(6)  # SMELL-A-3559
value_7 = step(7)  # SMELL-B-0404
value_8 = step(8)  # SMELL-B-0967
value_9 = step(9)  # SMELL-B-1530
value_10 = step(10)  # SMELL-B-2093
value_11 = step(11)  # SMELL-C-0437
value_12 = step(12)  # SMELL-C-1000

# end
