# module 280

value_0 = step(0)  # BUG-A-0041
value_1 = step(1)  # SMELL-A-0309
value_2 = step(2)  # SMELL-A-0872
value_3 = step(3)  # SMELL-A-1435
value_4 = step(4)  # SMELL-A-1998
value_5 = step(5)  # SMELL-A-2561
value_6 = step(6)  # SMELL-A-3124
value_7 = step(7)  # SMELL-A-3687
value_8 = step(8)  # SMELL-B-0532
value_9 = step(9)  # SMELL-B-1095
value_10 = step(10)  # SMELL-B-1658
value_11 = step(11)  # SMELL-C-0002
value_12 = step(12)  # SMELL-C-0565
value_13 = step(13)  # SMELL-C-1128

# end
