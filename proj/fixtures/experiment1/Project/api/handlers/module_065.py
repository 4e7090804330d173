# module 065

value_0 = step(0)  # SMELL-A-0037
value_1 = step(1)  # SMELL-A-0600
value_2 = step(2)  # SMELL-A-1163
value_3 = step(3)  # SMELL-A-1726
value_4 = step(4)  # SMELL-A-2289
value_5 = step(5)  # SMELL-A-2852
value_6 = step(6)  # SMELL-A-3415
value_7 = step(7)  # SMELL-B-0260
value_8 = step(8)  # SMELL-B-0823
value_9 = step(9)  # SMELL-B-1386
value_10 = step(10)  # SMELL-B-1949
value_11 = step(11)  # SMELL-C-0293
value_12 = step(12)  # SMELL-C-0856

# end
