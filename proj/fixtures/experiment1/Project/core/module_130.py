# module 130

value_0 = step(0)  # BUG-A-0100
value_1 = step(1)  # SMELL-A-0368
value_2 = step(2)  # SMELL-A-0931
value_3 = step(3)  # SMELL-A-1494
value_4 = step(4)  # SMELL-A-2057
value_5 = step(5)  # SMELL-A-2620
value_6 = step(6)  # SMELL-A-3183
value_7 = step(7)  # SMELL-B-0028
value_8 = step(8)  # SMELL-B-0591
value_9 = step(9)  # SMELL-B-1154
value_10 = step(10)  # SMELL-B-1717
value_11 = step(11)  # SMELL-C-0061
value_12 = step(12)  # SMELL-C-0624
value_13 = step(13)  # SMELL-C-1187

# end
