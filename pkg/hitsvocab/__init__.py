"""hitsvocab - graph-based vocabulary selection for encoder-decoder preprocessing."""

__version__ = "0.1.0"

__all__ = ["__version__"]
