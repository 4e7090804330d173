# module 395

value_0 = step(0)  # SMELL-A-0245
value_1 = step(1)  # SMELL-A-0808
value_2 = step(2)  # SMELL-A-1371
value_3 = step(3)  # SMELL-A-1934
value_4 = step(4)  # SMELL-A-2497
value_5 = step(5)  # SMELL-A-3060
value_6 = step(6)  # SMELL-A-3623
value_7 = step(7)  # SMELL-B-0468
value_8 = step(8)  # SMELL-B-1031
value_9 = step(9)  # SMELL-B-1594
value_10 = step(10)  # SMELL-B-2157
value_11 = step(11)  # SMELL-C-0501
value_12 = step(12)  # SMELL-C-1064

# end
