"""
notemap: exact rational polynomial mappings between musical note-sets
"""

__version__ = "1.0.0"
__author__ = "notemap developers"
__description__ = "Derive, apply and verify polynomial functions between note-sets"
