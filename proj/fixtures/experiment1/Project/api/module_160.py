# module 160

value_0 = step(0)  # SMELL-A-0131
value_1 = step(1)  # SMELL-A-0694
value_2 = step(2)  # SMELL-A-1257
value_3 = step(3)  # SMELL-A-1820
value_4 = step(4)  # SMELL-A-2383
value_5 = step(5)  # SMELL-A-2946
value_6 = step(6)  # SMELL-A-3509
value_7 = step(7)  # SMELL-B-0354
value_8 = step(8)  # SMELL-B-0917
value_9 = step(9)  # SMELL-B-1480
value_10 = step(10)  # SMELL-B-2043
value_11 = step(11)  # SMELL-C-0387
value_12 = step(12)  # SMELL-C-0950

# end
