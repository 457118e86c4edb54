"""
CNF модуль - литералы, клаузы, множества клауз, DIMACS
"""
