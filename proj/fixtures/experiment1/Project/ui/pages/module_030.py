# module 030

value_0 = step(0)  # SMELL-A-0032
value_1 = step(1)  # SMELL-A-0595
value_2 = step(2)  # SMELL-A-1158
value_3 = step(3)  # SMELL-A-1721
value_4 = step(4)  # SMELL-A-2284
value_5 = step(5)  # SMELL-A-2847
value_6 = step(6)  # SMELL-A-3410
value_7 = step(7)  # SMELL-B-0255
value_8 = step(8)  # SMELL-B-0818
value_9 = step(9)  # SMELL-B-1381
value_10 = step(10)  # SMELL-B-1944
value_11 = step(11)  # SMELL-C-0288
value_12 = step(12)  # SMELL-C-0851

# end
