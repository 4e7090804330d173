# module 380

value_0 = step(0)  # SMELL-A-0082
value_1 = step(1)  # SMELL-A-0645
value_2 = step(2)  # SMELL-A-1208
value_3 = step(3)  # SMELL-A-1771
value_4 = step(4)  # SMELL-A-2334
value_5 = step(5)  # SMELL-A-2897
value_6 = step(6)  # SMELL-A-3460
value_7 = step(7)  # SMELL-B-0305
value_8 = step(8)  # SMELL-B-0868
value_9 = step(9)  # SMELL-B-1431
value_10 = step(10)  # SMELL-B-1994
value_11 = step(11)  # SMELL-C-0338
value_12 = step(12)  # SMELL-C-0901

# end
