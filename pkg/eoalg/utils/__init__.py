"""
Utilities for eoalg.
"""
