"""
Computational services for eoalg.
"""
