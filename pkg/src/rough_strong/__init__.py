"""Strong approximation of log-prices under stationary fOU rough volatility."""

__version__ = "0.1.0"
