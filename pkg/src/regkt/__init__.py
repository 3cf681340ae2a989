"""Relative Schur multipliers K^J_2(N,F) of finite groups via free envelopes."""

__version__ = "0.1.0"
