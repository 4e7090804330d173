# module 050

value_0 = step(0)  # BUG-B-0052
value_1 = step(1)  # SMELL-A-0437
value_2 = step(2)  # SMELL-A-1000
value_3 = step(3)  # SMELL-A-1563
value_4 = step(4)  # SMELL-A-2126
value_5 = step(5)  # SMELL-A-2689
value_6 = step(6)  # SMELL-A-3252
value_7 = step(7)  # SMELL-B-0097
value_8 = step(8)  # SMELL-B-0660
value_9 = step(9)  # SMELL-B-1223
value_10 = step(10)  # SMELL-B-1786
value_11 = step(11)  # SMELL-C-0130
value_12 = step(12)  # SMELL-C-0693
value_13 = step(13)  # SMELL-C-1256

# end
