# module 445

value_0 = step(0)  # BUG-B-0028
value_1 = step(1)  # SMELL-A-0413
value_2 = step(2)  # SMELL-A-0976
value_3 = step(3)  # SMELL-A-1539
value_4 = step(4)  # SMELL-A-2102
value_5 = step(5)  # SMELL-A-2665
value_6 = step(6)  # SMELL-A-3228
value_7 = step(7)  # SMELL-B-0073
value_8 = step(8)  # SMELL-B-0636
value_9 = step(9)  # SMELL-B-1199
value_10 = step(10)  # SMELL-B-1762
value_11 = step(11)  # SMELL-C-0106
value_12 = step(12)  # SMELL-C-0669
value_13 = step(13)  # SMELL-C-1232

# end
