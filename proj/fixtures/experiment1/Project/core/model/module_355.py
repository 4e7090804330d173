# module 355

value_0 = step(0)  # VULN-A-0059
value_1 = step(1)  # SMELL-A-0561
value_2 = step(2)  # SMELL-A-1124
value_3 = step(3)  # SMELL-A-1687
value_4 = step(4)  # SMELL-A-2250
value_5 = step(5)  # SMELL-A-2813
value_6 = step(6)  # SMELL-A-3376
value_7 = step(7)  # SMELL-B-0221
value_8 = step(8)  # SMELL-B-0784
value_9 = step(9)  # SMELL-B-1347
value_10 = step(10)  # SMELL-B-1910
value_11 = step(11)  # SMELL-C-0254
value_12 = step(12)  # SMELL-C-0817

# end
