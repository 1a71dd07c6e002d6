"""
Contains the value components (points, lines, forms and result variants).
"""
