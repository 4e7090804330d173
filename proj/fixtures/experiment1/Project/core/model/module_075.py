# module 075

value_0 = step(0)  # VULN-A-0019
value_1 = step(1)  # SMELL-A-0521
value_2 = step(2)  # SMELL-A-1084
value_3 = step(3)  # SMELL-A-1647
value_4 = step(4)  # SMELL-A-2210
value_5 = step(5)  # SMELL-A-2773
value_6 = step(6)  # SMELL-A-3336
value_7 = step(7)  # SMELL-B-0181
value_8 = step(8)  # SMELL-B-0744
value_9 = step(9)  # SMELL-B-1307
value_10 = step(10)  # SMELL-B-1870
value_11 = step(11)  # SMELL-C-0214
value_12 = step(12)  # SMELL-C-0777
value_13 = step(13)  # SMELL-C-1340

# end
