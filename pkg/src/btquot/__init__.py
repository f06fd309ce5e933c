"""Exact computations with root systems, unipotent groups over F_q[t] and
Bruhat-Tits building quotients."""

__version__ = "0.1.0"
