"""Hardness модуль - st-графы и трансляции C-DPP"""
