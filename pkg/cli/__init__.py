"""
knotsig command-line front end
"""
