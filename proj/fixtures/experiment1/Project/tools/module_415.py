# module 415

value_0 = step(0)  # SMELL-A-0087
value_1 = step(1)  # SMELL-A-0650
value_2 = step(2)  # SMELL-A-1213
value_3 = step(3)  # SMELL-A-1776
value_4 = step(4)  # SMELL-A-2339
value_5 = step(5)  # SMELL-A-2902
value_6 = step(6)  # SMELL-A-3465
value_7 = step(7)  # SMELL-B-0310
value_8 = step(8)  # SMELL-B-0873
value_9 = step(9)  # SMELL-B-1436
value_10 = step(10)  # SMELL-B-1999
value_11 = step(11)  # SMELL-C-0343
value_12 = step(12)  # SMELL-C-0906

# end
