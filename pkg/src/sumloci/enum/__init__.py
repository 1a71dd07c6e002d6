"""
Contains the enumerations used by the sumloci components.
"""
