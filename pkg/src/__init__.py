"""
Indoor visible light NOMA and WDM-NOMA link simulator.
"""
__version__ = "0.1.0"
