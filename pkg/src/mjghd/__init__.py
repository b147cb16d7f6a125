"""Clustering with mixtures of joint generalized hyperbolic distributions."""

__version__ = "0.1.0"
