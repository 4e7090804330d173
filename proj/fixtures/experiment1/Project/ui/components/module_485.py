# module 485

value_0 = step(0)  # SMELL-A-0097
value_1 = step(1)  # SMELL-A-0660
value_2 = step(2)  # SMELL-A-1223
value_3 = step(3)  # SMELL-A-1786
value_4 = step(4)  # SMELL-A-2349
value_5 = step(5)  # SMELL-A-2912
value_6 = step(6)  # SMELL-A-3475
value_7 = step(7)  # SMELL-B-0320
value_8 = step(8)  # SMELL-B-0883
value_9 = step(9)  # SMELL-B-1446
value_10 = step(10)  # SMELL-B-2009
value_11 = step(11)  # SMELL-C-0353
value_12 = step(12)  # SMELL-C-0916

# end
