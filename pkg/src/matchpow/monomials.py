"""Monomials, monomial ideals, matching powers and generator-level invariants.

Monomials are exponent tuples over a ring with ``nvars`` named variables
x1..xn; a :class:`MonomialIdeal` stores its minimal generating set in a fixed
canonical order (degree, then lexicographic on exponent vectors), so equal
ideals have identical representations.  The unit ideal is representable only
through the ``is_unit`` flag, which exists for the k = 0 matching power
convention.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .errors import InvalidInput, ParseError

Monomial = tuple  # exponent vector; the zero vector is the unit monomial


def mono_degree(u):
    return sum(u)


def mono_support(u):
    return frozenset(i for i, e in enumerate(u) if e)


def mono_mask(u):
    m = 0
    for i, e in enumerate(u):
        if e:
            m |= 1 << i
    return m


def mono_mul(u, v):
    return tuple(a + b for a, b in zip(u, v))


def mono_lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_gcd(u, v):
    return tuple(min(a, b) for a, b in zip(u, v))


def mono_divides(u, v):
    """True when u divides v."""
    return all(a <= b for a, b in zip(u, v))


def mono_quotient(v, u):
    """v / gcd(v, u), the generator map of the monomial colon."""
    return tuple(max(b - a, 0) for a, b in zip(u, v))


def variable(i, nvars):
    """The monomial x_{i+1} (0-based index i) in an nvars-variable ring."""
    return tuple(1 if j == i else 0 for j in range(nvars))


def _sort_key(u):
    return (sum(u), u)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its canonical minimal generating set."""

    nvars: int
    gens: tuple
    is_unit: bool = False

    def __post_init__(self):
        if self.nvars < 1:
            raise InvalidInput("nvars must be positive")

    @property
    def is_zero(self):
        return not self.is_unit and not self.gens

    @property
    def is_squarefree(self):
        return all(e <= 1 for u in self.gens for e in u)

    def contains(self, u):
        """Membership test for the monomial u."""
        if self.is_unit:
            return True
        return any(mono_divides(g, u) for g in self.gens)

    def key(self):
        """Canonical text form; identical iff the ideals are equal."""
        return emit_ideal_text(self)

    def __repr__(self):
        if self.is_unit:
            body = "unit"
        elif self.is_zero:
            body = "zero"
        else:
            body = ", ".join(format_monomial(g) for g in self.gens)
        return f"MonomialIdeal({self.nvars}; {body})"


def zero_ideal(nvars):
    return MonomialIdeal(nvars, ())


def unit_ideal(nvars):
    return MonomialIdeal(nvars, (), is_unit=True)


def principal_ideal(u, nvars):
    return minimalize([u], nvars)


def minimalize(monomials, nvars) -> MonomialIdeal:
    """Ideal generated by the given monomials, minimalized and canonicalized."""
    seen = set()
    for u in monomials:
        if len(u) != nvars:
            raise InvalidInput(f"monomial length {len(u)} != nvars {nvars}")
        if any(e < 0 or not isinstance(e, int) for e in u):
            raise InvalidInput(f"bad exponent vector {u!r}")
        if not any(u):
            return unit_ideal(nvars)
        seen.add(tuple(u))
    mons = sorted(seen, key=_sort_key)
    kept = []
    for u in mons:
        if not any(mono_divides(v, u) for v in kept):
            kept.append(u)
    return MonomialIdeal(nvars, tuple(kept))


def _check_same_ring(I, J):
    if I.nvars != J.nvars:
        raise InvalidInput(f"nvars mismatch: {I.nvars} != {J.nvars}")


def ideal_sum(I, J) -> MonomialIdeal:
    _check_same_ring(I, J)
    if I.is_unit or J.is_unit:
        return unit_ideal(I.nvars)
    return minimalize(I.gens + J.gens, I.nvars)


def ideal_product(I, J) -> MonomialIdeal:
    _check_same_ring(I, J)
    if I.is_zero or J.is_zero:
        return zero_ideal(I.nvars)
    if I.is_unit:
        return J
    if J.is_unit:
        return I
    return minimalize([mono_mul(u, v) for u in I.gens for v in J.gens], I.nvars)


def ideal_intersection(I, J) -> MonomialIdeal:
    _check_same_ring(I, J)
    if I.is_unit:
        return J
    if J.is_unit:
        return I
    if I.is_zero or J.is_zero:
        return zero_ideal(I.nvars)
    return minimalize([mono_lcm(u, v) for u in I.gens for v in J.gens], I.nvars)


def colon(I, u) -> MonomialIdeal:
    """The colon ideal I : u for a monomial u."""
    if len(u) != I.nvars:
        raise InvalidInput("monomial length does not match nvars")
    if I.is_unit or I.is_zero:
        return I
    return minimalize([mono_quotient(v, u) for v in I.gens], I.nvars)


def matching_power(I, k) -> MonomialIdeal:
    """Ideal generated by products of k generators with pairwise disjoint supports."""
    if k < 0:
        raise InvalidInput("k must be nonnegative")
    if k == 0:
        return unit_ideal(I.nvars)
    if I.is_unit:
        raise InvalidInput("matching powers of the unit ideal are undefined")
    if k == 1:
        return I
    gens = I.gens
    m = len(gens)
    if m < k:
        return zero_ideal(I.nvars)
    masks = [mono_mask(u) for u in gens]
    out = set()

    def extend(start, used, acc, need):
        if need == 0:
            out.add(acc)
            return
        for idx in range(start, m - need + 1):
            if masks[idx] & used:
                continue
            extend(idx + 1, used | masks[idx], mono_mul(acc, gens[idx]), need - 1)

    extend(0, 0, (0,) * I.nvars, k)
    if not out:
        return zero_ideal(I.nvars)
    return minimalize(out, I.nvars)


def monomial_grade(I) -> int:
    """nu(I): the largest k with a nonzero kth matching power."""
    if I.is_unit:
        raise InvalidInput("monomial grade of the unit ideal is undefined")
    if I.is_zero:
        return 0
    masks = [mono_mask(u) for u in I.gens]
    m = len(masks)
    best = 0

    def extend(start, used, size):
        nonlocal best
        if size > best:
            best = size
        if size + (m - start) <= best:
            return
        for idx in range(start, m):
            if masks[idx] & used:
                continue
            extend(idx + 1, used | masks[idx], size + 1)

    extend(0, 0, 0)
    return best


def partial_star(I) -> MonomialIdeal:
    """Ideal generated by all u/x_i over generators u and variables x_i | u."""
    if I.is_zero or I.is_unit:
        raise InvalidInput("partial_star requires a nonzero proper ideal")
    quots = []
    for u in I.gens:
        for i, e in enumerate(u):
            if e:
                quots.append(tuple(b - 1 if j == i else b for j, b in enumerate(u)))
    return minimalize(quots, I.nvars)


def big_cosize(I) -> int:
    """Smallest s such that every s generators already attain the full lcm.

    For each variable where the full lcm has exponent e > 0, a set of
    generators misses the lcm exactly when all of them have exponent < e
    there; the largest such set plus one is the answer.
    """
    if I.is_zero or I.is_unit:
        raise InvalidInput("big_cosize requires a nonzero proper ideal")
    full = I.gens[0]
    for u in I.gens[1:]:
        full = mono_lcm(full, u)
    worst = 0
    for i, e in enumerate(full):
        if e:
            missing = sum(1 for u in I.gens if u[i] < e)
            worst = max(worst, missing)
    return worst + 1


def polarize(I):
    """Standard polarization; returns (squarefree ideal, provenance list).

    Variable i contributes max(1, max exponent of x_i over the generators)
    copies, so every original variable survives; provenance maps each new
    variable index to (original index, copy number).
    """
    n = I.nvars
    copies = [1] * n
    for u in I.gens:
        for i, e in enumerate(u):
            if e > copies[i]:
                copies[i] = e
    offsets = []
    total = 0
    for c in copies:
        offsets.append(total)
        total += c
    provenance = [(i, j) for i in range(n) for j in range(copies[i])]
    if I.is_unit:
        return unit_ideal(total), provenance
    new_gens = []
    for u in I.gens:
        w = [0] * total
        for i, e in enumerate(u):
            for j in range(e):
                w[offsets[i] + j] = 1
        new_gens.append(tuple(w))
    return minimalize(new_gens, total), provenance


def initial_degree(I) -> int:
    """Minimum degree of a generator."""
    if I.is_zero:
        raise InvalidInput("the zero ideal has no initial degree")
    if I.is_unit:
        return 0
    return mono_degree(I.gens[0])


def squarefree_veronese(nvars, d) -> MonomialIdeal:
    """Ideal of all squarefree monomials of degree d; zero when d > nvars."""
    if d < 0:
        raise InvalidInput("degree must be nonnegative")
    if d == 0:
        return unit_ideal(nvars)
    if d > nvars:
        return zero_ideal(nvars)
    gens = []
    for combo in itertools.combinations(range(nvars), d):
        w = [0] * nvars
        for i in combo:
            w[i] = 1
        gens.append(tuple(w))
    return MonomialIdeal(nvars, tuple(sorted(gens, key=_sort_key)))


def maximal_ideal(nvars) -> MonomialIdeal:
    """The ideal generated by all the variables."""
    return squarefree_veronese(nvars, 1)


# ---------------------------------------------------------------------------
# fields


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (char 0) or a prime field GF(p)."""

    char: int = 0

    def __post_init__(self):
        if self.char == 0:
            return
        if not _is_prime(self.char):
            raise InvalidInput(f"{self.char} is not prime")
        if self.char >= 2**31:
            raise InvalidInput("prime fields are supported for p < 2**31")

    def label(self):
        return "q" if self.char == 0 else f"gf{self.char}"

    @staticmethod
    def parse(text):
        t = text.strip().lower()
        if t in ("q", "qq", "0"):
            return RATIONALS
        m = re.fullmatch(r"gf:?(\d+)", t)
        if not m:
            raise InvalidInput(f"unknown field {text!r}; use q, gf2, gf3 or gf:<p>")
        return FieldSpec(int(m.group(1)))


RATIONALS = FieldSpec(0)
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)


# ---------------------------------------------------------------------------
# the ideal text format:
#   nvars <n>
#   x1 x3^2        (one monomial per line; '#' comments; blank lines ignored;
#                   the single token '1' denotes the unit monomial)

_TOKEN_RE = re.compile(r"x(\d+)(?:\^(\d+))?$")


def parse_ideal_text(text) -> MonomialIdeal:
    nvars = None
    gens = []
    unit = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if nvars is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "nvars" or not parts[1].isdigit():
                raise ParseError("expected header 'nvars <n>'", line=lineno)
            nvars = int(parts[1])
            if nvars < 1:
                raise ParseError("nvars must be positive", line=lineno)
            continue
        expo = [0] * nvars
        for tok in line.split():
            if tok == "1":
                continue
            m = _TOKEN_RE.match(tok)
            if not m:
                raise ParseError(f"bad monomial token {tok!r}", line=lineno)
            idx = int(m.group(1))
            if not 1 <= idx <= nvars:
                raise ParseError(f"variable x{idx} out of range 1..{nvars}", line=lineno)
            e = int(m.group(2)) if m.group(2) else 1
            if e < 1:
                raise ParseError(f"bad exponent in {tok!r}", line=lineno)
            expo[idx - 1] += e
        if not any(expo):
            unit = True
        else:
            gens.append(tuple(expo))
    if nvars is None:
        raise ParseError("missing 'nvars <n>' header", line=1)
    if unit:
        return unit_ideal(nvars)
    return minimalize(gens, nvars)


def format_monomial(u):
    if not any(u):
        return "1"
    toks = []
    for i, e in enumerate(u):
        if e == 1:
            toks.append(f"x{i + 1}")
        elif e > 1:
            toks.append(f"x{i + 1}^{e}")
    return " ".join(toks)


def emit_ideal_text(I) -> str:
    lines = [f"nvars {I.nvars}"]
    if I.is_unit:
        lines.append("1")
    elif I.is_zero:
        lines.append("# zero ideal")
    else:
        lines.extend(format_monomial(u) for u in I.gens)
    return "\n".join(lines) + "\n"
