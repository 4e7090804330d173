# module 555

value_0 = step(0)  # SMELL-A-0107
value_1 = step(1)  # SMELL-A-0670
value_2 = step(2)  # SMELL-A-1233
value_3 = step(3)  # SMELL-A-1796
value_4 = step(4)  # SMELL-A-2359
value_5 = step(5)  # SMELL-A-2922
value_6 = step(6)  # SMELL-A-3485
value_7 = step(7)  # SMELL-B-0330
value_8 = step(8)  # SMELL-B-0893
value_9 = step(9)  # SMELL-B-1456
value_10 = step(10)  # SMELL-B-2019
value_11 = step(11)  # SMELL-C-0363
value_12 = step(12)  # SMELL-C-0926

# end
