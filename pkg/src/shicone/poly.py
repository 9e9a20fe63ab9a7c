"""Dense integer polynomials in t, just enough ring structure for exact elimination."""
from __future__ import annotations


def _trim(c) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        self.coeffs = _trim(coeffs)

    @staticmethod
    def _lift(x) -> "Poly":
        return x if isinstance(x, Poly) else Poly((x,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        o = Poly._lift(other).coeffs
        a = self.coeffs
        n = max(len(a), len(o))
        return Poly(tuple((a[i] if i < len(a) else 0) + (o[i] if i < len(o) else 0) for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-Poly._lift(other))

    def __rsub__(self, other):
        return Poly._lift(other) - self

    def __mul__(self, other):
        o = Poly._lift(other).coeffs
        a = self.coeffs
        if not a or not o:
            return Poly()
        out = [0] * (len(a) + len(o) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(o):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __floordiv__(self, other):
        """Exact division; raises if the divisor does not divide."""
        d = Poly._lift(other).coeffs
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [0] * max(len(rem) - len(d) + 1, 0)
        for k in range(len(q) - 1, -1, -1):
            top = rem[k + len(d) - 1]
            if top % d[-1]:
                raise ArithmeticError("inexact polynomial division")
            c = top // d[-1]
            q[k] = c
            if c:
                for j, y in enumerate(d):
                    rem[k + j] -= c * y
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return Poly(q)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, t):
        out = 0
        for c in reversed(self.coeffs):
            out = out * t + c
        return out

    def shift(self, k: int = 1) -> "Poly":
        return Poly((0,) * k + self.coeffs) if self.coeffs else Poly()

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k == 0:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


T = Poly((0, 1))
