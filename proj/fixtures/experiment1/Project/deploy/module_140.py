# module 140

value_0 = step(0)  # BUG-A-0021
value_1 = step(1)  # SMELL-A-0289
value_2 = step(2)  # SMELL-A-0852
value_3 = step(3)  # SMELL-A-1415
value_4 = step(4)  # SMELL-A-1978
value_5 = step(5)  # SMELL-A-2541
value_6 = step(6)  # SMELL-A-3104
value_7 = step(7)  # SMELL-A-3667
value_8 = step(8)  # SMELL-B-0512
value_9 = step(9)  # SMELL-B-1075
value_10 = step(10)  # SMELL-B-1638
value_11 = step(11)  # SMELL-B-2201
value_12 = step(12)  # SMELL-C-0545
value_13 = step(13)  # SMELL-C-1108

# end
