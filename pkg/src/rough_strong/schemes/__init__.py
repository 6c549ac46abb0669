from rough_strong.schemes.strong import (
    Scheme,
    SchemeResult,
    euler,
    price_from_logprice,
    scheme_parts,
    scheme_values,
    trapezoid,
)

__all__ = [
    "Scheme",
    "SchemeResult",
    "euler",
    "price_from_logprice",
    "scheme_parts",
    "scheme_values",
    "trapezoid",
]
