"""Affine linear functionals on Q^n and the reflections they define.

A functional is stored in coefficient form, alpha(x) = const + coeffs . x,
which is metric free.  The gradient (the vector representing the linear
part) and the coroot depend on a chosen inner product and are computed on
demand: gradient = G^{-1} coeffs, coroot = 2 gradient / |gradient|^2.

A convenient identity used throughout: the Cartan pairing of two
functionals, <beta_bar, alpha_bar_coroot>, equals the plain dot product of
beta's coefficient vector with alpha's coroot vector.
"""

from __future__ import annotations

from fractions import Fraction

from .lattices import InnerProduct
from .linalg import as_vec, dot, frac, is_zero_vec, mat_vec, smul, vsub


class AffineFunctional:
    __slots__ = ("const", "coeffs")

    def __init__(self, const, coeffs):
        self.const = frac(const)
        self.coeffs = as_vec(coeffs)

    @classmethod
    def linear(cls, coeffs):
        return cls(0, coeffs)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def __call__(self, x) -> Fraction:
        return self.const + dot(self.coeffs, as_vec(x))

    def is_constant(self) -> bool:
        return is_zero_vec(self.coeffs)

    def gradient(self, ip: InnerProduct):
        """Vector g with alpha(x + t) = alpha(x) + <g, t>_ip."""
        cached = ip._gradient_cache.get(self.coeffs)
        if cached is None:
            cached = mat_vec(ip.gram_inverse(), self.coeffs)
            ip._gradient_cache[self.coeffs] = cached
        return cached

    def coroot(self, ip: InnerProduct):
        """The coroot vector 2 g / <g, g>_ip of a non-constant functional."""
        cached = ip._coroot_cache.get(self.coeffs)
        if cached is None:
            g = self.gradient(ip)
            n2 = ip.pairing(g, g)
            cached = smul(Fraction(2) / n2, g)
            ip._coroot_cache[self.coeffs] = cached
        return cached

    def norm2(self, ip: InnerProduct) -> Fraction:
        g = self.gradient(ip)
        return ip.pairing(g, g)

    def cartan_with(self, other: "AffineFunctional", ip: InnerProduct) -> Fraction:
        """<self_bar, other_bar_coroot>; integer for root pairs."""
        return dot(self.coeffs, other.coroot(ip))

    def __neg__(self):
        return AffineFunctional(-self.const, tuple(-c for c in self.coeffs))

    def __add__(self, other):
        return AffineFunctional(
            self.const + other.const,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)),
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = frac(c)
        return AffineFunctional(c * self.const, smul(c, self.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, AffineFunctional)
            and self.const == other.const
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.const, self.coeffs))

    def proportional_to(self, other: "AffineFunctional") -> bool:
        """True if the linear parts are parallel (either orientation)."""
        a, b = self.coeffs, other.coeffs
        for i in range(len(a)):
            if a[i] != 0 and b[i] != 0:
                r = a[i] / b[i]
                return all(x == r * y for x, y in zip(a, b))
            if (a[i] == 0) != (b[i] == 0):
                return False
        return True

    def __repr__(self):
        return f"AffineFunctional({format_functional(self)!r})"


def format_functional(f: AffineFunctional, names=None) -> str:
    """Human form like '1/2 - x1 - x2' (x-coordinates are 1-based)."""
    terms = []
    if f.const != 0:
        terms.append(str(f.const))
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        name = names[i] if names else f"x{i + 1}"
        if c == 1:
            term = name
        elif c == -1:
            term = f"-{name}"
        else:
            term = f"{c}*{name}"
        terms.append(term)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def reflect(alpha: AffineFunctional, x, ip: InnerProduct):
    """Reflection of the point x about the zero set of alpha."""
    if alpha.is_constant():
        raise ValueError("cannot reflect about a constant functional")
    return vsub(as_vec(x), smul(alpha(x), alpha.coroot(ip)))


def reflect_functional(
    alpha: AffineFunctional, beta: AffineFunctional, ip: InnerProduct
) -> AffineFunctional:
    """Action of s_alpha on functionals: beta - <beta_bar, alpha_coroot> alpha."""
    if alpha.is_constant():
        raise ValueError("cannot reflect about a constant functional")
    c = beta.cartan_with(alpha, ip)
    return beta - alpha.scale(c)


class WeylElement:
    """A motion of Q^n: x |-> linear x + translation."""

    __slots__ = ("linear", "translation")

    def __init__(self, linear, translation):
        self.linear = tuple(as_vec(r) for r in linear)
        self.translation = as_vec(translation)

    @classmethod
    def identity(cls, n):
        from .linalg import identity as eye

        return cls(eye(n), (Fraction(0),) * n)

    @classmethod
    def reflection(cls, alpha: AffineFunctional, ip: InnerProduct):
        cor = alpha.coroot(ip)
        n = alpha.dim
        rows = []
        for i in range(n):
            row = [Fraction(1 if i == j else 0) for j in range(n)]
            for j in range(n):
                row[j] -= cor[i] * alpha.coeffs[j]
            rows.append(tuple(row))
        return cls(tuple(rows), smul(-alpha.const, cor))

    def apply(self, x):
        return tuple(
            t + dot(row, as_vec(x)) for row, t in zip(self.linear, self.translation)
        )

    def compose(self, other: "WeylElement"):
        """self after other: x |-> self(other(x))."""
        from .linalg import mat_mul

        lin = mat_mul(self.linear, other.linear)
        tr = tuple(
            t + dot(row, other.translation)
            for row, t in zip(self.linear, self.translation)
        )
        return WeylElement(lin, tr)

    def inverse(self):
        from .linalg import inverse, mat_vec as mv

        inv = inverse(self.linear)
        tr = tuple(-x for x in mv(inv, self.translation))
        return WeylElement(inv, tr)

    def is_isometry(self, ip: InnerProduct) -> bool:
        from .linalg import mat_mul, transpose

        m = self.linear
        return mat_mul(transpose(m), mat_mul(ip.gram, m)) == ip.gram

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and self.linear == other.linear
            and self.translation == other.translation
        )

    def __hash__(self):
        return hash((self.linear, self.translation))
