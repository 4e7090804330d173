# module 210

value_0 = step(0)  # BUG-A-0031
value_1 = step(1)  # SMELL-A-0299
value_2 = step(2)  # SMELL-A-0862
value_3 = step(3)  # SMELL-A-1425
value_4 = step(4)  # SMELL-A-1988
value_5 = step(5)  # SMELL-A-2551
value_6 = step(6)  # SMELL-A-3114
value_7 = step(7)  # SMELL-A-3677
value_8 = step(8)  # SMELL-B-0522
value_9 = step(9)  # SMELL-B-1085
value_10 = step(10)  # SMELL-B-1648
value_11 = step(11)  # SMELL-B-2211
value_12 = step(12)  # SMELL-C-0555
value_13 = step(13)  # SMELL-C-1118

# end
