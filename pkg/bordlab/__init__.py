"""
bordlab - combinatorial surgery on face-word 2-complexes
Links, collars, covers, homology and group cobordisms of rank 7/4 complexes
"""

__version__ = "1.0.0"
