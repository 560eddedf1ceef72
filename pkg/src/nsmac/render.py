"""Text, LaTeX and JSON renderings of polynomials, and a parser for the text form.

The text form is what ``XPolynomial.to_str`` prints, e.g.
``(1 - t)/(1 - q*t^2)*x1 + x2``; ``parse_xpolynomial`` reads it back (and
any other arithmetic expression in q, t, x1..xn).
"""
from __future__ import annotations

import ast
import json

from .exactalg import ONE, Q, T, QTPoly, QTRational, XPolynomial

__all__ = [
    "SCHEMA",
    "parse_xpolynomial",
    "factor_binomials",
    "latex_qtpoly",
    "latex_coefficient",
    "latex_xpolynomial",
    "json_document",
]

SCHEMA = "nsmac/1"


class _Evaluator(ast.NodeVisitor):
    def __init__(self, n):
        self.n = n

    def generic_visit(self, node):
        raise ValueError(f"unsupported syntax: {ast.dump(node)}")

    def visit_Expression(self, node):
        return self.visit(node.body)

    def visit_Constant(self, node):
        if not isinstance(node.value, int) or isinstance(node.value, bool):
            raise ValueError(f"only integer constants are allowed, got {node.value!r}")
        return XPolynomial.constant(self.n, node.value)

    def visit_Name(self, node):
        if node.id == "q":
            return XPolynomial.constant(self.n, Q)
        if node.id == "t":
            return XPolynomial.constant(self.n, T)
        if node.id.startswith("x") and node.id[1:].isdigit():
            i = int(node.id[1:])
            if not 1 <= i <= self.n:
                raise ValueError(f"variable {node.id} out of range for n={self.n}")
            return XPolynomial.var(i, self.n)
        raise ValueError(f"unknown name {node.id!r}")

    def visit_UnaryOp(self, node):
        v = self.visit(node.operand)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
        raise ValueError("unsupported unary operator")

    def visit_BinOp(self, node):
        a, b = self.visit(node.left), self.visit(node.right)
        op = node.op
        if isinstance(op, ast.Add):
            return a + b
        if isinstance(op, ast.Sub):
            return a - b
        if isinstance(op, ast.Mult):
            return a * b
        if isinstance(op, ast.Div):
            return a.scale(_as_scalar(b).inverse())
        if isinstance(op, ast.Pow):
            e = _as_scalar(b)
            if not (e.den.is_one() and set(e.num.terms) <= {(0, 0)}):
                raise ValueError("exponents must be integer constants")
            k = e.num.terms.get((0, 0), 0)
            if k < 0 and len(a) != 1:
                raise ValueError("negative powers need a single term")
            return a ** k
        raise ValueError("unsupported binary operator")


def _as_scalar(f):
    items = list(f.items())
    if not items:
        return QTRational.coerce(0)
    if len(items) != 1 or any(items[0][0]):
        raise ValueError("expected an expression free of x")
    return items[0][1]


def parse_xpolynomial(text, n):
    """Parse an arithmetic expression in q, t, x1..xn (``^`` or ``**`` for powers).

    Negative powers are allowed on single terms, so Laurent monomials such
    as ``x3^-1`` read back.
    """
    tree = ast.parse(text.replace("^", "**"), mode="eval")
    return _Evaluator(n).visit(tree)


# -- LaTeX ----------------------------------------------------------------------

def factor_binomials(p):
    """Split p as sign * content * q^a t^b * prod (1 - q^i t^j)^k * rest.

    Returns ``(sign, content, (a, b), [((i, j), k), ...], rest)``.  Larger
    binomials are tried first so 1 - q^2 t^2 stays whole.
    """
    if p.is_zero():
        return 1, 0, (0, 0), [], p
    content = p.content()
    a, b = p.min_exponents()
    rest = p.shift(-a, -b)
    rest = QTPoly({k: c // content for k, c in rest.items()})
    sign = 1
    if rest.leading_coefficient() < 0:
        sign, rest = -1, -rest
    factors = []
    if not rest.is_monomial():
        A, B = rest.max_exponents()
        cands = sorted(
            ((i, j) for i in range(A + 1) for j in range(B + 1) if i or j),
            key=lambda ij: (-(ij[0] + ij[1]), -ij[0]),
        )
        for i, j in cands:
            binom = QTPoly({(0, 0): 1, (i, j): -1})
            k = 0
            while not rest.is_monomial():
                try:
                    rest = rest.exact_div(binom)
                except ArithmeticError:
                    break
                k += 1
            if k:
                factors.append(((i, j), k))
        if rest.leading_coefficient() < 0:
            sign, rest = -sign, -rest
    return sign, content, (a, b), factors, rest


def _latex_pow(var, e):
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{{{e}}}"


def latex_qtpoly(p):
    """Plain expanded LaTeX for a QTPoly."""
    if p.is_zero():
        return "0"
    out = []
    for (a, b), c in p.sorted_terms():
        mono = r"\,".join(s for s in (_latex_pow("q", a), _latex_pow("t", b)) if s)
        body = mono if mono and abs(c) == 1 else (f"{abs(c)}" + (r"\," + mono if mono else ""))
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+" if c > 0 else "-") + body)
    return "".join(out)


def _latex_factored(p):
    """(sign, body, is_product) using the binomial factorization."""
    sign, content, (a, b), factors, rest = factor_binomials(p)
    pieces = []
    if content != 1:
        pieces.append(str(content))
    mono = r"\,".join(s for s in (_latex_pow("q", a), _latex_pow("t", b)) if s)
    if mono:
        pieces.append(mono)
    for (i, j), k in factors:
        inner = "1-" + r"\,".join(s for s in (_latex_pow("q", i), _latex_pow("t", j)) if s)
        pieces.append(f"\\left({inner}\\right)" + (f"^{{{k}}}" if k > 1 else ""))
    if not rest.is_one():
        pieces.append(f"\\left({latex_qtpoly(rest)}\\right)")
    if not pieces:
        return sign, "1", False
    if len(pieces) == 1 and pieces[0].startswith(r"\left(") and pieces[0].endswith(r"\right)"):
        # a lone factor needs no parentheses
        return sign, pieces[0][len(r"\left("):-len(r"\right)")], False
    return sign, r"\,".join(pieces), True


def latex_coefficient(c):
    """LaTeX for a QTRational, keeping 1 - q^a t^b binomials factored."""
    c = QTRational.coerce(c)
    sn, num, _ = _latex_factored(c.num)
    if c.den.is_one():
        return ("-" if sn < 0 else "") + num
    sd, den, _ = _latex_factored(c.den)
    sign = "-" if sn * sd < 0 else ""
    return f"{sign}\\frac{{{num}}}{{{den}}}"


def _latex_monomial(exps):
    return r"\,".join(
        (f"x_{{{i + 1}}}" if e == 1 else f"x_{{{i + 1}}}^{{{e}}}") for i, e in enumerate(exps) if e
    )


def latex_xpolynomial(f, lead=None):
    """LaTeX for an XPolynomial; ``lead`` puts that monomial first."""
    items = f.sorted_items()
    if lead is not None:
        lead = tuple(lead)
        items.sort(key=lambda kv: kv[0] != lead)
    if not items:
        return "0"
    out = []
    for exps, c in items:
        mono = _latex_monomial(exps)
        if c == ONE:
            term = mono or "1"
        elif c == -ONE:
            term = "-" + (mono or "1")
        else:
            coef = latex_coefficient(c)
            if c.den.is_one() and len(c.num.terms) > 1 and not coef.startswith(r"\left"):
                coef = f"\\left({coef}\\right)"
            term = f"{coef}\\,{mono}" if mono else coef
        if out and not term.startswith("-"):
            out.append(" + " + term)
        elif out:
            out.append(" - " + term[1:])
        else:
            out.append(term)
    return "".join(out)


def json_document(f, **meta):
    """Deterministic JSON text for a polynomial plus metadata."""
    doc = {"schema": SCHEMA}
    doc.update(meta)
    doc["n"] = f.n
    doc["terms"] = f.to_records()
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))
