"""
notemap utilities package
"""
