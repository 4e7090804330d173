# module 260

value_0 = step(0)  # BUG-B-0082
value_1 = step(1)  # SMELL-A-0467
value_2 = step(2)  # SMELL-A-1030
value_3 = step(3)  # SMELL-A-1593
value_4 = step(4)  # SMELL-A-2156
value_5 = step(5)  # SMELL-A-2719
value_6 = step(6)  # SMELL-A-3282
value_7 = step(7)  # SMELL-B-0127
value_8 = step(8)  # SMELL-B-0690
value_9 = step(9)  # SMELL-B-1253
value_10 = step(10)  # SMELL-B-1816
value_11 = step(11)  # SMELL-C-0160
value_12 = step(12)  # SMELL-C-0723
value_13 = step(13)  # SMELL-C-1286

# end
