"""Published values of E_mu(x; q, t) for n = 3, transcribed term by term."""
from __future__ import annotations

from functools import lru_cache

from .render import parse_xpolynomial

__all__ = ["APPENDIX_N3", "appendix_table"]

APPENDIX_N3 = {
    (0, 0, 0): "1",
    (1, 0, 0): "x1",
    (0, 1, 0): "x2 + (1-t)/(1-q*t^2)*x1",
    (0, 0, 1): "x3 + (1-t)/(1-q*t)*(x1 + x2)",
    (1, 1, 0): "x1*x2",
    (1, 0, 1): "x1*x3 + (1-t)/(1-q*t^2)*x1*x2",
    (0, 1, 1): "x2*x3 + (1-t)/(1-q*t)*(x1*x2 + x1*x3)",
    (2, 0, 0): "x1^2 + q*(1-t)/(1-q*t)*(x1*x2 + x1*x3)",
    (0, 2, 0): (
        "x2^2 + (1-t)/(1-q^2*t^2)*x1^2 + q*(1-t)/(1-q*t)*x2*x3"
        " + q*(1-t)^2/((1-q*t)*(1-q^2*t^2))*x1*x3"
        " + (1-t)*(1+q-q*t-q^2*t^2)/((1-q*t)*(1-q^2*t^2))*x1*x2"
    ),
}


@lru_cache(maxsize=None)
def appendix_table():
    """Map mu -> XPolynomial for every published n = 3 entry."""
    return {mu: parse_xpolynomial(text, 3) for mu, text in APPENDIX_N3.items()}
