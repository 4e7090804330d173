# module 300

value_0 = step(0)  # SMELL-A-0151
value_1 = step(1)  # SMELL-A-0714
value_2 = step(2)  # SMELL-A-1277
value_3 = step(3)  # SMELL-A-1840
value_4 = step(4)  # SMELL-A-2403
value_5 = step(5)  # SMELL-A-2966
value_6 = step(6)  # SMELL-A-3529
value_7 = step(7)  # SMELL-B-0374
value_8 = step(8)  # SMELL-B-0937
value_9 = step(9)  # SMELL-B-1500
value_10 = step(10)  # SMELL-B-2063
value_11 = step(11)  # SMELL-C-0407
value_12 = step(12)  # SMELL-C-0970

# end
