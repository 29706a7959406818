"""
Combinatorics of graded gentle algebras from triangulated surfaces, with a
focus on the torus with one boundary component.
"""

__version__ = '0.1.0'

__all__ = ['triangulation', 'misctools', 'modeling']
