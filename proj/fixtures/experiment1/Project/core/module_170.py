# module 170

value_0 = step(0)  # SMELL-A-0052
value_1 = step(1)  # SMELL-A-0615
value_2 = step(2)  # SMELL-A-1178
value_3 = step(3)  # SMELL-A-1741
value_4 = step(4)  # SMELL-A-2304
value_5 = step(5)  # SMELL-A-2867
value_6 = step(6)  # SMELL-A-3430
value_7 = step(7)  # SMELL-B-0275
value_8 = step(8)  # SMELL-B-0838
value_9 = step(9)  # SMELL-B-1401
value_10 = step(10)  # SMELL-B-1964
value_11 = step(11)  # SMELL-C-0308
value_12 = step(12)  # SMELL-C-0871

# end
