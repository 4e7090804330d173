# module 020

value_0 = step(0)  # SMELL-A-0111
value_1 = step(1)  # SMELL-A-0674
value_2 = step(2)  # SMELL-A-1237
value_3 = step(3)  # SMELL-A-1800
value_4 = step(4)  # SMELL-A-2363
value_5 = step(5)  # SMELL-A-2926
value_6 = step(6)  # SMELL-A-3489
value_7 = step(7)  # SMELL-B-0334
value_8 = step(8)  # SMELL-B-0897
value_9 = step(9)  # SMELL-B-1460
value_10 = step(10)  # SMELL-B-2023
value_11 = step(11)  # SMELL-C-0367
value_12 = step(12)  # SMELL-C-0930

# end
