"""
Bundled relation files.
"""
