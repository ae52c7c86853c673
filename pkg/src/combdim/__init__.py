"""Graphs of cyclic modules over trivial extensions F_p ⋉ F_p^n."""

__version__ = "0.1.0"
