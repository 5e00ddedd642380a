"""Exact multivariate polynomial algebra for the quadric presentation.

Polynomials live in Q[x_1..x_n, t] with every variable of cohomological
degree 2; internally all computations run on ordinary total degree and the
doubling happens only when a Hilbert series is emitted (s -> s^2).

The Groebner engine is a plain Buchberger loop: normal pair selection
(smallest lcm first), the coprimality criterion, and the chain criterion.
Instance sizes here are a handful of quadrics in at most nine variables, so
nothing fancier is warranted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .roots import CartanMatrix, leading_minors_positive

# ---------------------------------------------------------------------------
# monomial orders

def grevlex_key(exps):
    """Graded reverse lexicographic, first listed variable largest."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def grlex_key(exps):
    """Graded lexicographic, first listed variable largest."""
    return (sum(exps), exps)


MONOMIAL_ORDERS = {"grevlex": grevlex_key, "grlex": grlex_key}


def order_key(ordering: str):
    try:
        return MONOMIAL_ORDERS[ordering]
    except KeyError:
        raise ValueError(
            f"unknown monomial order {ordering!r}; expected one of "
            f"{sorted(MONOMIAL_ORDERS)}") from None


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# polynomials

class Poly:
    """Multivariate polynomial: exponent tuple -> nonzero Fraction."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Poly":
        exps = tuple(1 if k == index else 0 for k in range(nvars))
        return cls(nvars, {exps: 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        out = dict(self.terms)
        for exps, c in other.terms.items():
            acc = out.get(exps, Fraction(0)) + c
            if acc:
                out[exps] = acc
            else:
                out.pop(exps, None)
        return Poly(self.nvars, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for exps, c in other.terms.items():
            acc = out.get(exps, Fraction(0)) - c
            if acc:
                out[exps] = acc
            else:
                out.pop(exps, None)
        return Poly(self.nvars, out)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = _mono_mul(e1, e2)
                acc = out.get(exps, Fraction(0)) + c1 * c2
                if acc:
                    out[exps] = acc
                else:
                    out.pop(exps, None)
        return Poly(self.nvars, out)

    def term_mul(self, coeff, exps) -> "Poly":
        return Poly(self.nvars,
                    {_mono_mul(e, exps): c * coeff for e, c in self.terms.items()})

    def scale(self, c) -> "Poly":
        return Poly(self.nvars, {e: v * c for e, v in self.terms.items()})

    def leading(self, key):
        """(exponents, coefficient) of the leading term under the order key."""
        exps = max(self.terms, key=key)
        return exps, self.terms[exps]

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.total_degrees()) <= 1

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def graded_degree(self) -> int:
        """Cohomological degree: twice the total degree."""
        return 2 * self.total_degree()

    def normalized(self) -> "Poly":
        """Integer content 1 and positive integer leading coefficient under
        grevlex; keeps Buchberger's intermediate coefficients small."""
        if not self.terms:
            return self
        den_lcm = 1
        for c in self.terms.values():
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        nums = [c * den_lcm for c in self.terms.values()]
        g = 0
        for c in nums:
            g = gcd(g, int(c))
        factor = Fraction(den_lcm, g)
        out = {e: c * factor for e, c in self.terms.items()}
        lead = max(out, key=grevlex_key)
        if out[lead] < 0:
            out = {e: -c for e, c in out.items()}
        return Poly(self.nvars, out)

    def monic(self, key) -> "Poly":
        if not self.terms:
            return self
        _, lc = self.leading(key)
        return self.scale(Fraction(1) / lc)

    def sorted_terms(self, key):
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]), reverse=True)

    def as_term_list(self, key=grevlex_key):
        """Serialization: descending [(exponents, numerator, denominator)]."""
        return [
            [list(e), c.numerator, c.denominator]
            for e, c in self.sorted_terms(key)
        ]

    def render(self, var_names, key=grevlex_key) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.sorted_terms(key):
            mono = "*".join(
                f"{var_names[i]}" + (f"^{k}" if k > 1 else "")
                for i, k in enumerate(e) if k)
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)

    def __repr__(self):
        names = [f"z{i+1}" for i in range(self.nvars)]
        return f"Poly({self.render(names)})"


@dataclass(frozen=True)
class Ideal:
    """A list of nonzero generators in a named polynomial ring."""

    var_names: tuple[str, ...]
    generators: tuple[Poly, ...]

    def __post_init__(self):
        for g in self.generators:
            if not g:
                raise ValueError("ideal generators must be nonzero")
            if g.nvars != len(self.var_names):
                raise ValueError("generator variable count mismatch")

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    def to_json(self):
        return {
            "variables": list(self.var_names),
            "generators": [g.as_term_list() for g in self.generators],
        }


def x_var_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


def build_ideal_J(cartan: CartanMatrix) -> Ideal:
    """Quadric ideal of the equivariant presentation in Q[x_1..x_n, t]:
    one generator sum_j <alpha_i, alpha_j> x_i x_j - 2 t x_i per node i."""
    n = cartan.rank
    nvars = n + 1  # trailing variable is t
    gens = []
    for i in range(1, n + 1):
        terms: dict[tuple, Fraction] = {}
        for j in range(1, n + 1):
            a_ij = cartan.a(i, j)
            if not a_ij:
                continue
            exps = [0] * nvars
            exps[i - 1] += 1
            exps[j - 1] += 1
            key = tuple(exps)
            terms[key] = terms.get(key, Fraction(0)) + a_ij
        exps = [0] * nvars
        exps[i - 1] = 1
        exps[n] = 1
        terms[tuple(exps)] = terms.get(tuple(exps), Fraction(0)) - 2
        gens.append(Poly(nvars, terms))
    return Ideal(x_var_names(n) + ("t",), tuple(gens))


def build_ideal_Jcheck(cartan: CartanMatrix) -> Ideal:
    """The same generators with t set to zero, in Q[x_1..x_n]."""
    n = cartan.rank
    gens = []
    for i in range(1, n + 1):
        terms: dict[tuple, Fraction] = {}
        for j in range(1, n + 1):
            a_ij = cartan.a(i, j)
            if not a_ij:
                continue
            exps = [0] * n
            exps[i - 1] += 1
            exps[j - 1] += 1
            key = tuple(exps)
            terms[key] = terms.get(key, Fraction(0)) + a_ij
        gens.append(Poly(n, terms))
    return Ideal(x_var_names(n), tuple(gens))


# ---------------------------------------------------------------------------
# Buchberger

def normal_form(p: Poly, basis, key) -> Poly:
    """Remainder of p on division by the basis (full reduction)."""
    remainder = Poly.zero(p.nvars)
    leads = [(g, g.leading(key)) for g in basis if g]
    work = p
    while work:
        exps, coeff = work.leading(key)
        for g, (ge, gc) in leads:
            if _divides(ge, exps):
                work = work - g.term_mul(coeff / gc, _mono_div(exps, ge))
                break
        else:
            mono = Poly(p.nvars, {exps: coeff})
            remainder = remainder + mono
            work = work - mono
    return remainder


def s_polynomial(f: Poly, g: Poly, key) -> Poly:
    fe, fc = f.leading(key)
    ge, gc = g.leading(key)
    lcm = _mono_lcm(fe, ge)
    return (f.term_mul(Fraction(1) / fc, _mono_div(lcm, fe))
            - g.term_mul(Fraction(1) / gc, _mono_div(lcm, ge)))


def groebner_basis(ideal: Ideal, ordering: str = "grevlex") -> list[Poly]:
    """Reduced Groebner basis, deterministic for a fixed order.

    Pairs are treated smallest lcm first; a pair is dropped when its leading
    monomials are coprime, or when some third basis element divides the lcm
    and both sibling pairs were already treated (chain criterion).
    """
    key = order_key(ordering)
    basis = [g.normalized() for g in ideal.generators if g]
    basis.sort(key=lambda g: key(g.leading(key)[0]))
    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}

    def lcm_of(i, j):
        return _mono_lcm(basis[i].leading(key)[0], basis[j].leading(key)[0])

    while pairs:
        i, j = min(pairs, key=lambda ij: (key(lcm_of(*ij)), ij))
        pairs.discard((i, j))
        fe = basis[i].leading(key)[0]
        ge = basis[j].leading(key)[0]
        lcm = _mono_lcm(fe, ge)
        if _mono_mul(fe, ge) == lcm:
            continue  # coprime leading monomials
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(basis[k].leading(key)[0], lcm) \
                    and (min(i, k), max(i, k)) not in pairs \
                    and (min(j, k), max(j, k)) not in pairs:
                skip = True
                break
        if skip:
            continue
        remainder = normal_form(s_polynomial(basis[i], basis[j], key), basis, key)
        if remainder:
            remainder = remainder.normalized()
            basis.append(remainder)
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))

    return _reduce_basis(basis, key)


def _reduce_basis(basis, key) -> list[Poly]:
    """Minimalize then tail-reduce; output monic, sorted by leading monomial."""
    basis = [g for g in basis if g]
    basis.sort(key=lambda g: key(g.leading(key)[0]))
    minimal = []
    for g in basis:
        ge = g.leading(key)[0]
        if not any(_divides(h.leading(key)[0], ge) for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        h = normal_form(g, others, key)
        assert h, "minimal basis element reduced to zero"
        reduced.append(h.monic(key))
    reduced.sort(key=lambda g: key(g.leading(key)[0]), reverse=True)
    return reduced


def leading_term_exponents(basis, ordering: str = "grevlex"):
    key = order_key(ordering)
    return [g.leading(key)[0] for g in basis]


# ---------------------------------------------------------------------------
# Hilbert series

@dataclass(frozen=True)
class HilbertSeries:
    """Rational function numerator/denominator in s, canonically reduced.

    The variable s tracks cohomological degree, so with all ring variables
    of degree 2 every exponent appearing is even.
    """

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    @classmethod
    def from_fraction(cls, numerator, denominator) -> "HilbertSeries":
        num = [Fraction(c) for c in numerator]
        den = [Fraction(c) for c in denominator]
        g = _poly_gcd(num, den)
        num = _poly_exact_div(num, g)
        den = _poly_exact_div(den, g)
        num, den = _clear_denominators(num, den)
        return cls(tuple(num), tuple(den))

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        left = _poly_mul(list(self.numerator), list(other.denominator))
        right = _poly_mul(list(other.numerator), list(self.denominator))
        return _poly_trim(left) == _poly_trim(right)

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def coefficients(self, count: int) -> list[int]:
        """First ``count`` power-series coefficients."""
        den = list(self.denominator)
        assert den and den[0] != 0
        state = [Fraction(c) for c in self.numerator] + [Fraction(0)] * count
        out = []
        for k in range(count):
            c = state[k] / den[0]
            assert c.denominator == 1
            out.append(int(c))
            for j, d in enumerate(den):
                if k + j < len(state):
                    state[k + j] -= c * d
        return out

    def to_json(self):
        return {
            "numerator_coeffs": list(self.numerator),
            "denominator_coeffs": list(self.denominator),
        }

    def __repr__(self):
        return (f"HilbertSeries(num={list(self.numerator)}, "
                f"den={list(self.denominator)})")


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _poly_exact_div(p, d):
    """Exact polynomial quotient over Q (raises when not exact)."""
    p = [Fraction(c) for c in p]
    d = [Fraction(c) for c in d]
    _poly_trim(p)
    _poly_trim(d)
    if not d:
        raise ZeroDivisionError
    if not p:
        return []
    q = [Fraction(0)] * (len(p) - len(d) + 1)
    for k in range(len(p) - 1, len(d) - 2, -1):
        if p[k] == 0:
            continue
        f = p[k] / d[-1]
        q[k - len(d) + 1] = f
        for j, b in enumerate(d):
            p[k - len(d) + 1 + j] -= f * b
    assert not any(p), "inexact polynomial division"
    return q


def _poly_gcd(p, q):
    """Monic GCD over Q by the Euclidean algorithm."""
    a = _poly_trim([Fraction(c) for c in p])
    b = _poly_trim([Fraction(c) for c in q])
    while b:
        r = list(a)
        while _poly_trim(r) and len(r) >= len(b):
            f = r[-1] / b[-1]
            shift = len(r) - len(b)
            for j, c in enumerate(b):
                r[shift + j] -= f * c
            _poly_trim(r)
        a, b = b, r
    if not a:
        return [Fraction(1)]
    lead = a[-1]
    return [c / lead for c in a]


def _clear_denominators(num, den):
    """Scale to coprime integer coefficients, denominator constant > 0."""
    den_lcm = 1
    for c in list(num) + list(den):
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
    num_i = [int(c * den_lcm) for c in num]
    den_i = [int(c * den_lcm) for c in den]
    g = 0
    for c in num_i + den_i:
        g = gcd(g, c)
    if g:
        num_i = [c // g for c in num_i]
        den_i = [c // g for c in den_i]
    const = next((c for c in den_i if c), 0)
    assert const != 0, "denominator must be nonzero"
    if const < 0:
        num_i = [-c for c in num_i]
        den_i = [-c for c in den_i]
    return num_i, den_i


def _monomial_quotient_numerator(gens, nvars: int):
    """Numerator of the Hilbert series of R/I for a monomial ideal I, over
    the internal degree-1 grading: F = N(s)/(1-s)^nvars.

    Recursion: pivot on a variable x occurring in a mixed generator, using
    N(I) = N(I + (x)) + s * N(I : x); base cases are pure-power ideals.
    """
    gens = _minimalize(gens)
    if any(sum(g) == 0 for g in gens):
        return [0]  # ideal contains 1
    mixed = [g for g in gens if sum(1 for e in g if e) > 1]
    if not mixed:
        out = [1]
        for g in gens:
            out = _poly_mul(out, [1] + [0] * (sum(g) - 1) + [-1])
        return out
    counts = [0] * nvars
    for g in mixed:
        for v in range(nvars):
            if g[v]:
                counts[v] += 1
    pivot_var = counts.index(max(counts))
    pivot = tuple(1 if v == pivot_var else 0 for v in range(nvars))
    plus = gens + [pivot]
    colon = [tuple(max(e - p, 0) for e, p in zip(g, pivot)) for g in gens]
    n_plus = _monomial_quotient_numerator(plus, nvars)
    n_colon = _monomial_quotient_numerator(colon, nvars)
    out = [0] * max(len(n_plus), len(n_colon) + 1)
    for i, c in enumerate(n_plus):
        out[i] += c
    for i, c in enumerate(n_colon):
        out[i + 1] += c
    return out


def _minimalize(gens):
    out = []
    for g in sorted(set(gens), key=lambda e: (sum(e), e)):
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return out


def hilbert_series_of_quotient(ideal: Ideal, ordering: str = "grevlex") -> HilbertSeries:
    """Hilbert series of the quotient by the ideal, all variables degree 2.

    Computed from the leading-term ideal of a Groebner basis; the result is
    order-independent, which the tests assert by recomputing under grlex.
    """
    basis = groebner_basis(ideal, ordering)
    lead = leading_term_exponents(basis, ordering)
    numer_internal = _monomial_quotient_numerator(lead, ideal.nvars)
    # substitute s -> s^2 and attach the denominator (1 - s^2)^nvars
    numer = [0] * (2 * len(numer_internal) - 1) if numer_internal else [0]
    for i, c in enumerate(numer_internal):
        numer[2 * i] = c
    denom = [1]
    for _ in range(ideal.nvars):
        denom = _poly_mul(denom, [1, 0, -1])
    return HilbertSeries.from_fraction(numer, denom)


def free_ring_series(nvars: int) -> HilbertSeries:
    """Hilbert series of a free ring on nvars degree-2 variables."""
    denom = [1]
    for _ in range(nvars):
        denom = _poly_mul(denom, [1, 0, -1])
    return HilbertSeries.from_fraction([1], denom)


# ---------------------------------------------------------------------------
# regular sequences and zero sets

def is_regular_sequence(var_names, polys, ordering: str = "grevlex"):
    """Hilbert-series criterion: the sequence is regular iff the quotient
    series equals F(R) * prod_k (1 - s^(deg theta_k)).

    Returns (flag, certificate) where the certificate carries both series.
    """
    var_names = tuple(var_names)
    for p in polys:
        if not p.is_homogeneous() or p.total_degree() < 1:
            raise ValueError("regular-sequence input must be homogeneous of "
                             "positive degree")
    ideal = Ideal(var_names, tuple(polys))
    actual = hilbert_series_of_quotient(ideal, ordering)
    expected_num = [1]
    for p in polys:
        d = p.graded_degree()
        expected_num = _poly_mul(expected_num, [1] + [0] * (d - 1) + [-1])
    denom = [1]
    for _ in var_names:
        denom = _poly_mul(denom, [1, 0, -1])
    expected = HilbertSeries.from_fraction(expected_num, denom)
    flag = actual == expected
    certificate = {
        "computed_series": actual.to_json(),
        "expected_series": expected.to_json(),
        "degrees": [p.graded_degree() for p in polys],
    }
    return flag, certificate


def zero_set_is_origin(ideal: Ideal, ordering: str = "grevlex") -> bool:
    """For a homogeneous ideal: the affine zero set is {0} iff the quotient
    is finite dimensional, i.e. the leading-term ideal contains a pure power
    of every variable."""
    for g in ideal.generators:
        if not g.is_homogeneous():
            raise ValueError("zero-set criterion requires homogeneous generators")
    basis = groebner_basis(ideal, ordering)
    lead = leading_term_exponents(basis, ordering)
    for v in range(ideal.nvars):
        if not any(e[v] and sum(e) == e[v] for e in lead):
            return False
    return True


def is_positive_definite(matrix) -> bool:
    """Positive definiteness via leading principal minors.

    The route is valid for (possibly non-symmetric) Cartan matrices A: with
    D the diagonal of squared root lengths, A = D B with B symmetric, so the
    leading minors of A are positive multiples of those of B and Sylvester's
    criterion transfers.
    """
    rows = [tuple(r) for r in matrix]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix must be square")
    return leading_minors_positive(rows)


def zero_set_via_minors(cartan: CartanMatrix) -> bool:
    """Independent oracle: every principal submatrix of the Cartan matrix is
    positive definite, so the quadric system forces the origin."""
    n = cartan.rank
    for mask in range(1 << n):
        idx = [i for i in range(n) if mask >> i & 1]
        sub = [[cartan.entries[r][c] for c in idx] for r in idx]
        if idx and not is_positive_definite(sub):
            return False
    return True
