# module 010

value_0 = step(0)  # SMELL-A-0190
value_1 = step(1)  # SMELL-A-0753
value_2 = step(2)  # SMELL-A-1316
value_3 = step(3)  # SMELL-A-1879
value_4 = step(4)  # SMELL-A-2442
value_5 = step(5)  # SMELL-A-3005
value_6 = step(6)  # SMELL-A-3568
value_7 = step(7)  # SMELL-B-0413
value_8 = step(8)  # SMELL-B-0976
value_9 = step(9)  # SMELL-B-1539
value_10 = step(10)  # SMELL-B-2102
value_11 = step(11)  # SMELL-C-0446
value_12 = step(12)  # SMELL-C-1009

# end
