# module 520

value_0 = step(0)  # SMELL-A-0102
value_1 = step(1)  # SMELL-A-0665
value_2 = step(2)  # SMELL-A-1228
value_3 = step(3)  # SMELL-A-1791
value_4 = step(4)  # SMELL-A-2354
value_5 = step(5)  # SMELL-A-2917
value_6 = step(6)  # SMELL-A-3480
value_7 = step(7)  # SMELL-B-0325
value_8 = step(8)  # SMELL-B-0888
value_9 = step(9)  # SMELL-B-1451
value_10 = step(10)  # SMELL-B-2014
value_11 = step(11)  # SMELL-C-0358
value_12 = step(12)  # SMELL-C-0921

# end
