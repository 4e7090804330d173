# module 235

value_0 = step(0)  # BUG-A-0115
value_1 = step(1)  # SMELL-A-0383
value_2 = step(2)  # SMELL-A-0946
value_3 = step(3)  # SMELL-A-1509
value_4 = step(4)  # SMELL-A-2072
value_5 = step(5)  # SMELL-A-2635
value_6 = step(6)  # SMELL-A-3198
value_7 = step(7)  # SMELL-B-0043
value_8 = step(8)  # SMELL-B-0606
value_9 = step(9)  # SMELL-B-1169
value_10 = step(10)  # SMELL-B-1732
value_11 = step(11)  # SMELL-C-0076
value_12 = step(12)  # SMELL-C-0639
value_13 = step(13)  # SMELL-C-1202

# end
