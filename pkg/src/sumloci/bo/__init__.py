"""
Contains the shapes a caller constructs: triangles and convex polygons.
"""
