"""JSON and LaTeX renderings shared by the library and the CLI."""

import json

from .poly import IsobaricPolynomial, as_rational


def rational_str(c):
    return str(as_rational(c))


def poly_to_dict(p):
    return {
        "degree": p.degree,
        "k": p.k,
        "terms": [{"alpha": list(alpha), "coeff": rational_str(c)} for alpha, c in p],
    }


def poly_from_dict(data):
    try:
        degree = data["degree"]
        k = data["k"]
        raw = data["terms"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed polynomial JSON: {exc}") from None
    terms = {}
    for term in raw:
        alpha = tuple(term["alpha"])
        if alpha in terms:
            raise ValueError(f"duplicate monomial {alpha} in polynomial JSON")
        terms[alpha] = as_rational(term["coeff"])
    return IsobaricPolynomial(degree, k, terms)


def dumps(obj):
    """Deterministic JSON text (insertion-ordered keys, fixed separators)."""
    return json.dumps(obj, separators=(", ", ": "))


def _monomial_latex(alpha):
    parts = []
    for i, a in enumerate(alpha, start=1):
        if a == 0:
            continue
        if a == 1:
            parts.append(f"t_{{{i}}}" if i >= 10 else f"t_{i}")
        else:
            base = f"t_{{{i}}}" if i >= 10 else f"t_{i}"
            parts.append(f"{base}^{{{a}}}" if a >= 10 else f"{base}^{a}")
    return "".join(parts)


def _coeff_latex(c):
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def poly_to_latex(p):
    """LaTeX in canonical order; unit coefficients suppressed."""
    if p.is_zero():
        return "0"
    out = []
    for idx, (alpha, c) in enumerate(p):
        mono = _monomial_latex(alpha)
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if not mono:
            body = _coeff_latex(mag)
        elif mag == 1:
            body = mono
        else:
            body = _coeff_latex(mag) + mono
        if idx == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
