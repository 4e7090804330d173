# module 100

value_0 = step(0)  # SMELL-A-0042
value_1 = step(1)  # SMELL-A-0605
value_2 = step(2)  # SMELL-A-1168
value_3 = step(3)  # SMELL-A-1731
value_4 = step(4)  # SMELL-A-2294
value_5 = step(5)  # SMELL-A-2857
value_6 = step(6)  # SMELL-A-3420
value_7 = step(7)  # SMELL-B-0265
value_8 = step(8)  # SMELL-B-0828
value_9 = step(9)  # SMELL-B-1391
value_10 = step(10)  # SMELL-B-1954
value_11 = step(11)  # SMELL-C-0298
value_12 = step(12)  # SMELL-C-0861

# end
