"""Integer Laurent polynomials in x^(1/2) (and d for the two-variable kind).

Exponents of x are stored doubled so that half-integer powers are exact.
"""

from __future__ import annotations

import re
from typing import Iterable


class LaurentPoly2:
    """Element of Z[x^(+-1/2), d^(+-1)]; keys are (ex2, ed)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        t = {}
        for k, c in (terms or {}).items():
            if c:
                t[(int(k[0]), int(k[1]))] = int(c)
        self.terms = t

    @classmethod
    def monomial(cls, ex2: int = 0, ed: int = 0, coeff: int = 1) -> "LaurentPoly2":
        return cls({(ex2, ed): coeff})

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls({(0, 0): 1})

    def __add__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return LaurentPoly2(t)

    def __neg__(self):
        return LaurentPoly2({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly2({k: c * other for k, c in self.terms.items()})
        t: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                t[k] = t.get(k, 0) + c1 * c2
        return LaurentPoly2(t)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, LaurentPoly2) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return [(k[0], k[1], c) for k, c in sorted(self.terms.items())]

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "ex2": a, "ed": b} for a, b, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "LaurentPoly2":
        out = cls()
        for e in data:
            out = out + cls.monomial(e["ex2"], e["ed"], e["coeff"])
        return out

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*x^({a}/2)*d^{b}" for a, b, c in self.sorted_terms())

    @classmethod
    def from_text(cls, text: str) -> "LaurentPoly2":
        text = text.strip()
        if text == "0":
            return cls()
        out = cls()
        for part in text.split(" + "):
            m = re.fullmatch(r"\s*(-?\d+)\*x\^\((-?\d+)/2\)\*d\^(-?\d+)\s*", part)
            if not m:
                raise ValueError(f"bad term {part!r}")
            out = out + cls.monomial(int(m.group(2)), int(m.group(3)), int(m.group(1)))
        return out

    def substitute_d(self, d_ex2: int, d_sign: int) -> "LaurentPoly1":
        """Replace d by d_sign * x^(d_ex2/2)."""
        t: dict = {}
        for (a, b), c in self.terms.items():
            k = a + d_ex2 * b
            t[k] = t.get(k, 0) + c * (d_sign ** (b % 2))
        return LaurentPoly1(t)

    def __repr__(self):
        return f"LaurentPoly2({self.to_text()})"


class LaurentPoly1:
    """Element of Z[x^(+-1/2)]; keys are doubled exponents."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {int(k): int(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, ex2: int = 0, coeff: int = 1) -> "LaurentPoly1":
        return cls({ex2: coeff})

    @classmethod
    def from_ints(cls, coeffs: dict) -> "LaurentPoly1":
        """Build from integer exponents {k: c} meaning c*x^k."""
        return cls({2 * k: c for k, c in coeffs.items()})

    def __add__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return LaurentPoly1(t)

    def __neg__(self):
        return LaurentPoly1({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly1({k: c * other for k, c in self.terms.items()})
        t: dict = {}
        for a, c1 in self.terms.items():
            for b, c2 in other.terms.items():
                t[a + b] = t.get(a + b, 0) + c1 * c2
        return LaurentPoly1(t)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, LaurentPoly1) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def shift(self, ex2: int) -> "LaurentPoly1":
        return LaurentPoly1({k + ex2: c for k, c in self.terms.items()})

    def bar(self) -> "LaurentPoly1":
        """x -> x^-1."""
        return LaurentPoly1({-k: c for k, c in self.terms.items()})

    def at_one(self) -> int:
        return sum(self.terms.values())

    def min_ex2(self) -> int:
        return min(self.terms)

    def max_ex2(self) -> int:
        return max(self.terms)

    def normalized(self) -> "LaurentPoly1":
        """Canonical representative up to +-x^(k/2): lowest term at x^0, positive."""
        if not self.terms:
            return self
        p = self.shift(-self.min_ex2())
        return p if p.terms[0] > 0 else -p

    def equal_up_to_unit(self, other: "LaurentPoly1") -> bool:
        return self.normalized() == other.normalized()

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "ex2": k, "ed": 0} for k, c in sorted(self.terms.items())]

    def to_text(self) -> str:
        """Readable form like ``-x^-4 + x^-3 + x^-1``; half powers as x^(p/2)."""
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items()):
            if k == 0:
                mono = ""
            elif k % 2 == 0:
                mono = "x" if k == 2 else f"x^{k // 2}"
            else:
                mono = f"x^({k}/2)"
            if mono == "":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    @classmethod
    def from_text(cls, text: str) -> "LaurentPoly1":
        t = text.replace(" ", "")
        if t in ("", "0"):
            return cls()
        if t[0] not in "+-":
            t = "+" + t
        out = cls()
        pieces = re.split(r"(?<![\^(])(?=[+-])", t)
        for piece in pieces:
            if not piece:
                continue
            sign = -1 if piece[0] == "-" else 1
            body = piece[1:]
            if not body:
                raise ValueError(f"bad polynomial {text!r}")
            coeff, mono = 1, body
            cm = re.fullmatch(r"(\d+)\*?(.*)", body)
            if cm:
                coeff = int(cm.group(1))
                mono = cm.group(2)
            if mono == "":
                ex2 = 0
            elif mono == "x":
                ex2 = 2
            else:
                em = re.fullmatch(r"x\^\(?(-?\d+)(/2)?\)?", mono)
                if not em:
                    raise ValueError(f"bad monomial {mono!r}")
                ex2 = int(em.group(1)) * (1 if em.group(2) else 2)
            out = out + cls.monomial(ex2, sign * coeff)
        return out

    def __repr__(self):
        return f"LaurentPoly1({self.to_text()})"


def conway_normalize(p: LaurentPoly1) -> LaurentPoly1:
    """Alexander normal form: symmetric under x <-> 1/x with p(1) > 0.

    Raises ValueError if the polynomial cannot be put in that form.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no Conway normal form")
    span = p.max_ex2() + p.min_ex2()
    q = p.shift(-(span // 2))
    if span % 2 or q.bar() != q:
        raise ValueError(f"{p} is not symmetric up to a unit")
    if q.at_one() == 0:
        raise ValueError(f"{p} vanishes at 1; its sign is not fixed")
    if q.at_one() < 0:
        q = -q
    return q
