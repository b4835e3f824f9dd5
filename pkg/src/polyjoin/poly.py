"""Sparse polynomial types: Hilbert-Poincare series and beta-polynomials."""

from __future__ import annotations


class UniPoly:
    """Univariate polynomial in t with integer coefficients, stored sparsely.

    The table maps exponent to coefficient; zero coefficients are never
    stored, so the zero polynomial has an empty table.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        table = {}
        if coeffs:
            for e, v in coeffs.items():
                if not isinstance(e, int) or e < 0:
                    raise ValueError(f"bad exponent {e!r}")
                if v:
                    table[e] = v
        self.c = table

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def one(cls) -> "UniPoly":
        return cls({0: 1})

    @classmethod
    def term(cls, exponent: int, coeff: int = 1) -> "UniPoly":
        return cls({exponent: coeff})

    def coeff(self, exponent: int) -> int:
        return self.c.get(exponent, 0)

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return max(self.c) if self.c else -1

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self) -> bool:
        return bool(self.c)

    def __add__(self, other):
        if isinstance(other, int):
            other = UniPoly({0: other})
        if not isinstance(other, UniPoly):
            return NotImplemented
        out = dict(self.c)
        for e, v in other.c.items():
            w = out.get(e, 0) + v
            if w:
                out[e] = w
            else:
                out.pop(e, None)
        res = UniPoly.zero()
        res.c = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = UniPoly.zero()
        res.c = {e: -v for e, v in self.c.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = UniPoly({0: other})
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            res = UniPoly.zero()
            if other:
                res.c = {e: v * other for e, v in self.c.items()}
            return res
        if not isinstance(other, UniPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                w = out.get(e, 0) + v1 * v2
                if w:
                    out[e] = w
                else:
                    out.pop(e, None)
        res = UniPoly.zero()
        res.c = out
        return res

    __rmul__ = __mul__

    def shifted(self, k: int) -> "UniPoly":
        """Multiply by t^k."""
        return UniPoly({e + k: v for e, v in self.c.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c == ({0: other} if other else {})
        if isinstance(other, UniPoly):
            return self.c == other.c
        return NotImplemented

    def __repr__(self):
        return f"UniPoly({self.c!r})"

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c):
            v = self.c[e]
            if e == 0:
                parts.append(str(v))
            else:
                var = "t" if e == 1 else f"t^{e}"
                parts.append(var if v == 1 else f"{v}*{var}")
        return " + ".join(parts)


class MultiPoly:
    """Polynomial in s and squarefree vertex variables t[v].

    Terms are keyed by (s exponent, sorted tuple of t-variable names); every
    t-variable appears with exponent at most one. Products raise if the two
    factors share a t-variable, which would break squarefreeness.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        table = {}
        if coeffs:
            for key, v in coeffs.items():
                s, tsup = key
                if not isinstance(s, int) or s < 0:
                    raise ValueError(f"bad s exponent {s!r}")
                tsup = tuple(sorted(tsup))
                if len(set(tsup)) != len(tsup):
                    raise ValueError(f"repeated t variable in {tsup!r}")
                if v:
                    table[(s, tsup)] = table.get((s, tsup), 0) + v
        self.c = {k: v for k, v in table.items() if v}

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls({(0, ()): 1})

    @classmethod
    def term(cls, s_exp: int, tvars=(), coeff: int = 1) -> "MultiPoly":
        return cls({(s_exp, tuple(tvars)): coeff})

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self) -> bool:
        return bool(self.c)

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPoly.term(0, (), other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = dict(self.c)
        for k, v in other.c.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        res = MultiPoly.zero()
        res.c = out
        return res

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            res = MultiPoly.zero()
            if other:
                res.c = {k: v * other for k, v in self.c.items()}
            return res
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: dict[tuple, int] = {}
        for (s1, t1), v1 in self.c.items():
            for (s2, t2), v2 in other.c.items():
                if t1 and t2 and set(t1) & set(t2):
                    raise ValueError(f"t-support overlap: {t1!r} and {t2!r}")
                key = (s1 + s2, tuple(sorted(t1 + t2)))
                w = out.get(key, 0) + v1 * v2
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
        res = MultiPoly.zero()
        res.c = out
        return res

    __rmul__ = __mul__

    def substitute(self, replacements) -> "MultiPoly":
        """Replace t-variables by polynomials; unmapped variables survive."""
        total = MultiPoly.zero()
        for (s, tsup), v in self.c.items():
            acc = MultiPoly.term(s, (), v)
            for var in tsup:
                rep = replacements.get(var)
                if rep is None:
                    rep = MultiPoly.term(0, (var,))
                acc = acc * rep
            total = total + acc
        return total

    def eval_t_ones(self) -> UniPoly:
        """Set every t-variable to 1, leaving a polynomial in s."""
        out: dict[int, int] = {}
        for (s, _tsup), v in self.c.items():
            w = out.get(s, 0) + v
            if w:
                out[s] = w
            else:
                out.pop(s, None)
        return UniPoly(out)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c == ({(0, ()): other} if other else {})
        if isinstance(other, MultiPoly):
            return self.c == other.c
        return NotImplemented

    def __repr__(self):
        return f"MultiPoly({self.c!r})"

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for s, tsup in sorted(self.c):
            v = self.c[(s, tsup)]
            factors = []
            if v != 1 or (s == 0 and not tsup):
                factors.append(str(v))
            if s == 1:
                factors.append("s")
            elif s > 1:
                factors.append(f"s^{s}")
            factors.extend(f"t[{name}]" for name in tsup)
            parts.append("*".join(factors))
        return " + ".join(parts)
