# module 070

value_0 = step(0)  # BUG-A-0011
value_1 = step(1)  # SMELL-A-0279
value_2 = step(2)  # SMELL-A-0842
value_3 = step(3)  # SMELL-A-1405
value_4 = step(4)  # SMELL-A-1968
value_5 = step(5)  # SMELL-A-2531
value_6 = step(6)  # SMELL-A-3094
value_7 = step(7)  # SMELL-A-3657
value_8 = step(8)  # SMELL-B-0502
value_9 = step(9)  # SMELL-B-1065
value_10 = step(10)  # SMELL-B-1628
value_11 = step(11)  # SMELL-B-2191
value_12 = step(12)  # SMELL-C-0535
value_13 = step(13)  # SMELL-C-1098

# end
