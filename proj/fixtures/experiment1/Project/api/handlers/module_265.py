# module 265

value_0 = step(0)  # SMELL-A-0146
value_1 = step(1)  # SMELL-A-0709
value_2 = step(2)  # SMELL-A-1272
value_3 = step(3)  # SMELL-A-1835
value_4 = step(4)  # SMELL-A-2398
value_5 = step(5)  # SMELL-A-2961
value_6 = step(6)  # SMELL-A-3524
value_7 = step(7)  # SMELL-B-0369
value_8 = step(8)  # SMELL-B-0932
value_9 = step(9)  # SMELL-B-1495
value_10 = step(10)  # SMELL-B-2058
value_11 = step(11)  # SMELL-C-0402
value_12 = step(12)  # SMELL-C-0965

# end
