"""Local division, s-series, Becker's criterion and standard-basis completion.

Division for a local order cannot proceed naively: reducing x by x - x^2
gives x^2, x^3, ... forever.  The classical fix is the ecart-driven weak
normal form: among the applicable reducers pick one of minimal ecart, and
when even that minimal ecart exceeds the ecart of the current polynomial,
adjoin the current polynomial itself to the reducer list first.  Each
self-included reducer strictly shrinks the antichain of (initial exponent,
ecart) pairs available for further inclusions, so by Dickson's lemma only
finitely many inclusions happen; afterwards the top weight is non-increasing
while the initial exponent strictly climbs through a finite box, so the
loop stops.  The price is an explicit unit: the division identity reads

    unit * f  =  sum_i quotient_i * basis_i  +  remainder

with unit(0) = 1.  The remainder's initial exponent lies outside the
staircase of the basis initial exponents; a zero remainder certifies ideal
membership.  Units never move initial exponents, so every verdict built on
top (membership, diagrams, Becker's criterion) is unaffected by them.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .diagram import Diagram, vertices_from_exponents
from .errors import ResourceLimitError, ZeroPolynomialError
from .orders import REVERSE, LocalOrder, exp_add, exp_divides, exp_max, exp_sub
from .poly import Poly, initial_exponent, initial_term


@dataclass(frozen=True)
class ResourceLimits:
    """Desk-scale guards; exceeding one raises, nothing is truncated."""

    max_terms: int = 20000
    max_pairs: int = 4000
    max_reductions: int = 200000


DEFAULT_LIMITS = ResourceLimits()


def s_series(f: Poly, g: Poly, order: LocalOrder) -> Poly:
    """g_lead * x^(gamma-bf) * f - f_lead * x^(gamma-bg) * g.

    gamma is the componentwise max of the two initial exponents; the initial
    terms cancel, so the result is zero or sits strictly above gamma.
    """
    bf, cf = initial_term(f, order)
    bg, cg = initial_term(g, order)
    gamma = exp_max(bf, bg)
    return f.mul_term(cg, exp_sub(gamma, bf)) - g.mul_term(cf, exp_sub(gamma, bg))


def ecart(f: Poly, order: LocalOrder) -> int:
    """Weight spread between the top of the support and the initial exponent."""
    form = order.form
    top = max(form.weight(e) for e in f.exponents())
    return top - form.weight(initial_exponent(f, order))


@dataclass
class NormalFormResult:
    """Exact outcome of weak normal form against a basis list.

    ``unit`` and ``quotients`` are None when the caller asked for the
    remainder only (verdicts like membership need nothing else).
    """

    remainder: Poly
    unit: Poly | None
    quotients: list | None

    def verify(self, subject: Poly, basis) -> bool:
        """Re-expand unit*subject - sum(quotients*basis) - remainder to zero."""
        acc = self.unit * subject
        for q, g in zip(self.quotients, basis):
            acc = acc - q * g
        return (acc - self.remainder).is_zero


def _content(p: Poly) -> Fraction:
    """Positive rational c with p/c integer-primitive; growth control."""
    num = 0
    den = 1
    for _, coeff in p.items():
        num = gcd(num, coeff.numerator)
        den = lcm(den, coeff.denominator)
    return Fraction(num, den)


class _Reducer:
    """Basis element or self-included intermediate.

    The working polynomial is kept primitive; ``scale`` restores its true
    value.  For certificate tracking every reducer knows its own combination
    scale * poly = cof_f * f + sum_i cofs[i] * g_i over the subject f and
    the basis g_i (cof_f = None marks an original basis element).
    """

    __slots__ = ("poly", "head", "lead", "ec", "scale", "cof_f", "cofs")

    def __init__(self, poly, head, lead, ec, scale, cof_f, cofs):
        self.poly = poly
        self.head = head
        self.lead = lead
        self.ec = ec
        self.scale = scale
        self.cof_f = cof_f
        self.cofs = cofs


def weak_normal_form(
    f: Poly,
    basis,
    order: LocalOrder,
    limits: ResourceLimits = DEFAULT_LIMITS,
    certificates: bool = True,
) -> NormalFormResult:
    """Mora weak normal form of f against a list of nonzero polynomials.

    Always terminates on polynomial input (see module docstring).  When the
    remainder is nonzero its initial exponent is divisible by no basis
    initial exponent.  With ``certificates`` the unit and quotients of the
    division identity are materialized; without, only the remainder.
    """
    n = f.n
    one = Poly.constant(n, 1)
    zero = Poly.zero(n)
    if f.is_zero:
        if certificates:
            return NormalFormResult(zero, one, [zero] * len(basis))
        return NormalFormResult(zero, None, None)

    reducers = []
    for j, g in enumerate(basis):
        if g.is_zero:
            raise ZeroPolynomialError("basis elements must be nonzero")
        head, lead = initial_term(g, order)
        reducers.append(
            _Reducer(g, head, lead, ecart(g, order), Fraction(1), None, j)
        )

    h = f
    scale = _content(h)
    if scale != 1:
        h = h.scale(1 / scale)
    cof_f = one
    cofs: dict = {}
    steps = 0
    while not h.is_zero:
        bh, ch = initial_term(h, order)
        candidates = [t for t in reducers if exp_divides(t.head, bh)]
        if not candidates:
            break
        t = min(candidates, key=lambda r: r.ec)
        eh = ecart(h, order)
        if t.ec > eh:
            reducers.append(
                _Reducer(
                    h, bh, ch, eh, scale,
                    cof_f if certificates else None,
                    dict(cofs) if certificates else None,
                )
            )
        m_exp = exp_sub(bh, t.head)
        m_coeff = ch / t.lead
        h = h - t.poly.mul_term(m_coeff, m_exp)
        if certificates:
            # true subtracted value: (scale*m_coeff/t.scale) * x^m_exp * t_true
            m_cert = scale * m_coeff / t.scale
            if t.cof_f is None:
                j = t.cofs
                prev = cofs.get(j, zero)
                cofs[j] = prev - Poly.monomial(n, m_exp, m_cert)
            else:
                cof_f = cof_f - t.cof_f.mul_term(m_cert, m_exp)
                for j, c in t.cofs.items():
                    prev = cofs.get(j, zero)
                    cofs[j] = prev - c.mul_term(m_cert, m_exp)
        if not h.is_zero:
            c = _content(h)
            if c != 1:
                h = h.scale(1 / c)
                scale = scale * c
        steps += 1
        if steps > limits.max_reductions:
            raise ResourceLimitError("max_reductions", limits.max_reductions)
        if len(h) > limits.max_terms:
            raise ResourceLimitError("max_terms", limits.max_terms)

    remainder = h.scale(scale) if scale != 1 else h
    if not certificates:
        return NormalFormResult(remainder, None, None)
    # scale*h = cof_f*f + sum cofs[j]*g_j, so unit*f = sum Q_j g_j + remainder.
    quotients = [-cofs.get(j, zero) for j in range(len(basis))]
    return NormalFormResult(remainder, cof_f, quotients)


@dataclass
class StandardRepresentation:
    """Unit-adjusted standard representation unit*subject = sum Q_i basis_i.

    The representation is honest (unit-free) exactly when ``unit`` is the
    constant 1; either way the initial-exponent inequality below holds, and
    dividing by the unit would change no initial exponent.
    """

    subject: Poly
    quotients: list
    unit: Poly

    def verify(self, basis) -> bool:
        acc = self.unit * self.subject
        for q, g in zip(self.quotients, basis):
            acc = acc - q * g
        return acc.is_zero

    def inequality_holds(self, basis, order: LocalOrder) -> bool:
        """inexp(subject) <= inexp(Q_i basis_i) for every nonzero product."""
        if self.subject.is_zero:
            return True
        lead = order.key(initial_exponent(self.subject, order))
        for q, g in zip(self.quotients, basis):
            if q.is_zero:
                continue
            prod = q * g
            if prod.is_zero:
                continue
            if order.key(initial_exponent(prod, order)) < lead:
                return False
        return True


@dataclass
class BeckerResult:
    """Outcome of the s-series criterion over all pairs of a basis."""

    ok: bool
    representations: list = field(default_factory=list)
    failure: tuple | None = None  # (i, j, remainder)


def _becker_pair_fast(i, j, helems, denoms, order: LocalOrder, limits):
    """Homogeneous s-pair reduction with quotient recording.

    Against a basis coming out of completion this always reaches zero (the
    homogenized set is a basis in the graded sense) and yields an honest
    unit-free standard representation.  Returns (status, quotients, witness)
    with status one of "zero", "witness", "blocked"; "blocked" means the
    lead was stopped only by the grading variable, so nothing local can be
    concluded and the caller falls back to the unit-carrying division.
    """
    n = order.n
    bi, bj = helems[i], helems[j]
    gamma = exp_max(bi.lm, bj.lm)
    mi, mj = exp_sub(gamma, bi.lm), exp_sub(gamma, bj.lm)
    work = {exp_add(e, mi): v * bj.lc for e, v in bi.poly.items()}
    for e, v in bj.poly.items():
        key = exp_add(e, mj)
        acc = work.get(key, 0) - bi.lc * v
        if acc:
            work[key] = acc
        elif key in work:
            del work[key]
    if order.tiebreak == REVERSE:
        hkey = lambda e: (-e[n], e[n - 1 :: -1])
    else:
        hkey = lambda e: (-e[n], e[:n])
    records = []  # (reducer index, monomial, coefficient, lam after the step)
    lam = 1
    steps = 0
    while work:
        lm = min(work, key=hkey)
        t = None
        for k, b in enumerate(helems):
            if all(x <= y for x, y in zip(b.lm, lm)):
                t = k
                break
        if t is None:
            xpart = lm[:n]
            if any(
                all(x <= y for x, y in zip(b.lm[:n], xpart)) for b in helems
            ):
                return "blocked", None, None
            scale = Fraction(1, lam * denoms[i] * denoms[j])
            witness = Poly(n, [(e[:n], v) for e, v in work.items()]).scale(scale)
            return "witness", None, witness
        b = helems[t]
        c = work[lm]
        m_exp = exp_sub(lm, b.lm)
        lam *= b.lc
        records.append((t, m_exp, c, lam))
        work = {e: v * b.lc for e, v in work.items()}
        for e, v in b.poly.items():
            key = exp_add(e, m_exp)
            acc = work.get(key, 0) - c * v
            if acc:
                work[key] = acc
            elif key in work:
                del work[key]
        steps += 1
        if steps > limits.max_reductions:
            raise ResourceLimitError("max_reductions", limits.max_reductions)
    # a record added when the running scalar was lam_rec was scaled by every
    # later step, i.e. by lam/lam_rec in total
    base = Fraction(1, lam * denoms[i] * denoms[j])
    quotients = [Poly.zero(n) for _ in helems]
    for t, m_exp, c, lam_rec in records:
        coeff = c * denoms[t] * base * Fraction(lam, lam_rec)
        quotients[t] = quotients[t] + Poly.monomial(n, m_exp[:n], coeff)
    return "zero", quotients, None


def becker_check(
    basis, order: LocalOrder, limits: ResourceLimits = DEFAULT_LIMITS
) -> BeckerResult:
    """Try a standard representation for every pairwise s-series.

    Returns the first failing pair with its irreducible remainder, or all
    representations on success.  Pairs are scanned in index order, so the
    witness is deterministic.  Representations come from the graded engine
    (unit-free) whenever it settles the pair; the unit-carrying division is
    the fallback.
    """
    n = order.n
    form = order.form
    helems = []
    denoms = []
    for g in basis:
        if g.is_zero:
            raise ZeroPolynomialError("basis elements must be nonzero")
        d = 1
        for _, c in g.items():
            d = lcm(d, c.denominator)
        top = max(form.weight(e) for e in g.exponents())
        hpoly = {(*e, top - form.weight(e)): int(c * d) for e, c in g.items()}
        lm = min(
            hpoly,
            key=(lambda e: (-e[n], e[n - 1 :: -1]))
            if order.tiebreak == REVERSE
            else (lambda e: (-e[n], e[:n])),
        )
        helems.append(_HElement(hpoly, lm, 0, None))
        denoms.append(d)

    reps = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = s_series(basis[i], basis[j], order)
            if s.is_zero:
                reps.append((i, j, None))
                continue
            status, quotients, witness = _becker_pair_fast(
                i, j, helems, denoms, order, limits
            )
            if status == "zero":
                reps.append(
                    (i, j, StandardRepresentation(s, quotients, Poly.constant(n, 1)))
                )
                continue
            if status == "witness":
                return BeckerResult(False, reps, (i, j, witness))
            nf = weak_normal_form(s, basis, order, limits)
            if not nf.remainder.is_zero:
                return BeckerResult(False, reps, (i, j, nf.remainder))
            reps.append(
                (i, j, StandardRepresentation(s, nf.quotients, nf.unit))
            )
    return BeckerResult(True, reps)


@dataclass
class CompletionResult:
    """Completed basis plus, per element, its combination over the original
    generators (an exact polynomial identity, re-expandable in tests).
    Certificates are None when the completion ran in verdict-only mode."""

    basis: tuple
    certificates: tuple | None  # certificates[k][i] multiplies generator i


class IdealPresentation:
    """Generator list with cached standard bases and diagrams per order.

    An empty generator list represents the zero ideal.  Caching is
    compute-once under a lock, so concurrent readers are safe; a cached
    verdict-only completion is upgraded in place when certificates are
    requested later.
    """

    def __init__(self, n: int, generators):
        gens = []
        for g in generators:
            if not isinstance(g, Poly):
                raise TypeError("generators must be Poly instances")
            if g.n != n:
                raise ValueError(f"generator on {g.n} variables in an ideal on {n}")
            if g.is_zero:
                raise ZeroPolynomialError("generators must be nonzero")
            gens.append(g)
        self.n = n
        self.generators = tuple(gens)
        self._cache: dict = {}
        self._lock = threading.Lock()

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"IdealPresentation({self.n}, [{gens}])"

    def extended(self, extra) -> "IdealPresentation":
        """New presentation with extra generators appended (zeroes dropped)."""
        return IdealPresentation(
            self.n, list(self.generators) + [g for g in extra if not g.is_zero]
        )

    def completion(
        self,
        order: LocalOrder,
        limits: ResourceLimits = DEFAULT_LIMITS,
        certificates: bool = True,
    ) -> CompletionResult:
        with self._lock:
            got = self._cache.get(order)
        if got is not None and (got.certificates is not None or not certificates):
            return got
        result = _complete(self.generators, order, limits, certificates)
        with self._lock:
            cached = self._cache.get(order)
            if cached is not None and cached.certificates is not None:
                return cached
            self._cache[order] = result
            return result


def _homogenize_int(f: Poly, form):
    """Weighted homogenization as an integer-primitive dict.

    Pads each term with a grading variable so every term reaches the top
    weight of f, and strips the rational content c, so the returned dict
    equals f_hom / c.
    """
    top = max(form.weight(e) for e in f.exponents())
    content = _content(f)
    return (
        {(*e, top - form.weight(e)): int(c / content) for e, c in f.items()},
        content,
    )


def _int_content(d: dict) -> int:
    g = 0
    for v in d.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


class _HElement:
    """Weighted-homogeneous basis element over Z with cached lead data.

    Elements are kept free of common grading-variable powers; ``tpow``
    remembers how many were divided out.  ``cert`` (when tracked) is a list
    of exact rational cofactors with

        t^tpow * poly = sum_k cert[k] * hom(generator_k),

    which evaluates to an honest combination once the grading variable is
    set to 1.
    """

    __slots__ = ("poly", "lm", "lc", "tpow", "cert")

    def __init__(self, poly: dict, lm, tpow: int, cert):
        self.poly = poly
        self.lm = lm
        self.lc = poly[lm]
        self.tpow = tpow
        self.cert = cert


def _tshift(cert, n: int, k: int):
    if k == 0:
        return cert
    shift = (0,) * n + (k,)
    return [ck.mul_term(1, shift) for ck in cert]


def _hreduce(h, cert, tpow, basis, hkey, n, limits: ResourceLimits):
    """Full reduction in the homogenized world, fraction-free over Z.

    Scale by the reducer lead, subtract, strip the integer content:
    coefficients stay at Gaussian-elimination size, and because every
    polynomial is weighted-homogeneous the working position walks through
    the finitely many exponents of one graded piece, so reduction is short.
    Every term of the result is head-irreducible against the basis.
    """
    work = dict(h)
    finished = set()
    steps = 0
    while True:
        live = [e for e in work if e not in finished]
        if not live:
            break
        lm = min(live, key=hkey)
        t = None
        for b in basis:
            if all(x <= y for x, y in zip(b.lm, lm)):
                t = b
                break
        if t is None:
            finished.add(lm)
            continue
        c = work[lm]
        m_exp = exp_sub(lm, t.lm)
        lc = t.lc
        new = {e: v * lc for e, v in work.items()}
        for e, v in t.poly.items():
            key = exp_add(e, m_exp)
            acc = new.get(key, 0) - c * v
            if acc:
                new[key] = acc
            elif key in new:
                del new[key]
        work = new
        if cert is not None:
            cert = [
                ck.scale(lc) - tk.mul_term(c, m_exp)
                for ck, tk in zip(_tshift(cert, n, t.tpow), _tshift(t.cert, n, tpow))
            ]
            tpow += t.tpow
        if work:
            content = _int_content(work)
            if content not in (1, -1):
                work = {e: v // content for e, v in work.items()}
                if cert is not None:
                    cert = [ck.scale(Fraction(1, content)) for ck in cert]
        steps += 1
        if steps > limits.max_reductions:
            raise ResourceLimitError("max_reductions", limits.max_reductions)
        if len(work) > limits.max_terms:
            raise ResourceLimitError("max_terms", limits.max_terms)
    if work:
        tmin = min(e[n] for e in work)
        if tmin:
            work = {(*e[:n], e[n] - tmin): v for e, v in work.items()}
            tpow += tmin
    return work, cert, tpow


def _complete(
    generators, order: LocalOrder, limits: ResourceLimits, certificates: bool
) -> CompletionResult:
    """Completion through the weighted-homogeneous Buchberger loop.

    The generators are homogenized with a grading variable, a Groebner-style
    basis is computed for the graded global order (grade first, then the
    local order on the x-part), and the result is evaluated back at grading
    variable 1.  Initial exponents survive the round trip, which makes the
    dehomogenized set a standard basis for the local order.  The returned
    elements (the surviving graded basis with the original generators kept
    alongside) are scaled monic and each carries an exact polynomial
    combination over the original generators when certificates are
    requested.  Pairs are processed by smallest lcm weight first, ties by
    pair index, so output is a deterministic function of (generators,
    order).
    """
    n = order.n
    form = order.form
    if not generators:
        return CompletionResult((), () if certificates else None)

    # within one graded piece the x-part weight is grade minus the pad
    # exponent, so the lead comparison needs no weight arithmetic
    if order.tiebreak == REVERSE:
        hkey = lambda e: (-e[n], e[n - 1 :: -1])
    else:
        hkey = lambda e: (-e[n], e[:n])

    hzero = Poly.zero(n + 1)
    basis = []
    for k, g in enumerate(generators):
        hpoly, content = _homogenize_int(g, form)
        cert = None
        if certificates:
            cert = [
                Poly.constant(n + 1, 1 / content) if i == k else hzero
                for i in range(len(generators))
            ]
        basis.append(_HElement(hpoly, min(hpoly, key=hkey), 0, cert))

    def hweight(exp) -> int:
        return exp[n] + form.weight(exp[:n])

    pairs: dict = {}  # (i, j) -> (lcm weight, creation counter)
    counter = 0
    active = []  # indices whose leads are not divisible by a later lead
    reducers = []

    def push_pairs(new_index):
        """Becker-Weispfenning update: Gebauer-Moeller pruning of the pair
        set plus deletion of elements dominated by the new lead."""
        nonlocal counter
        t = basis[new_index].lm
        lcms = {i: exp_max(basis[i].lm, t) for i in active}
        # new pairs whose lcm is properly divisible by another new lcm go
        survivors = []
        for i in active:
            li = lcms[i]
            dominated = False
            for j in active:
                if j == i:
                    continue
                lj = lcms[j]
                if lj != li and exp_divides(lj, li):
                    dominated = True
                    break
                if lj == li and j < i:
                    dominated = True  # keep one representative per lcm
                    break
            if not dominated:
                survivors.append(i)
        # chain criterion on the old pairs
        for (a, b) in list(pairs):
            lab = exp_max(basis[a].lm, basis[b].lm)
            la = exp_max(basis[a].lm, t)
            lb = exp_max(basis[b].lm, t)
            if exp_divides(t, lab) and la != lab and lb != lab:
                del pairs[(a, b)]
        # product criterion last: coprime survivors vanish outright
        for i in survivors:
            if lcms[i] == exp_add(basis[i].lm, t):
                continue
            pairs[(i, new_index)] = (hweight(lcms[i]), counter)
            counter += 1
        if len(pairs) > limits.max_pairs:
            raise ResourceLimitError("max_pairs", limits.max_pairs)
        # leads now divisible by the new lead retire from the active set
        for i in list(active):
            if exp_divides(t, basis[i].lm):
                active.remove(i)
                reducers.remove(basis[i])
        active.append(new_index)
        reducers.append(basis[new_index])

    active.append(0)
    reducers.append(basis[0])
    for k in range(1, len(basis)):
        push_pairs(k)

    while pairs:
        (i, j) = min(pairs, key=lambda key: pairs[key])
        del pairs[(i, j)]
        bi, bj = basis[i], basis[j]
        gamma = exp_max(bi.lm, bj.lm)
        mi, mj = exp_sub(gamma, bi.lm), exp_sub(gamma, bj.lm)
        sp = {exp_add(e, mi): v * bj.lc for e, v in bi.poly.items()}
        for e, v in bj.poly.items():
            key = exp_add(e, mj)
            acc = sp.get(key, 0) - bi.lc * v
            if acc:
                sp[key] = acc
            elif key in sp:
                del sp[key]
        if not sp:
            continue
        cert = None
        if certificates:
            cert = [
                ck.mul_term(bj.lc, mi) - cl.mul_term(bi.lc, mj)
                for ck, cl in zip(
                    _tshift(bi.cert, n, bj.tpow), _tshift(bj.cert, n, bi.tpow)
                )
            ]
        sp, cert, tpow = _hreduce(
            sp, cert, bi.tpow + bj.tpow, reducers, hkey, n, limits
        )
        if not sp:
            continue
        basis.append(_HElement(sp, min(sp, key=hkey), tpow, cert))
        push_pairs(len(basis) - 1)

    # back to the local world: evaluate the grading variable at 1 and scale
    # monic on the initial coefficient.  The surviving elements form the
    # graded basis; the original generators ride along (they reduce to zero
    # against it, trivially so when their own lead survived), keeping
    # s-series and generator reductions against the result inside the
    # graded engine.
    keep = sorted(set(active) | set(range(len(generators))))
    out_basis = []
    out_certs = []
    seen = set()
    for b in (basis[k] for k in keep):
        raw = Poly(n, [(e[:n], v) for e, v in b.poly.items()])
        scale = 1 / raw.coeff(initial_exponent(raw, order))
        p = raw.scale(scale)
        if p in seen:
            continue
        seen.add(p)
        out_basis.append(p)
        if certificates:
            out_certs.append(
                tuple(
                    Poly(n, [(e[:n], v) for e, v in ck.items()]).scale(scale)
                    for ck in b.cert
                )
            )

    return CompletionResult(
        tuple(out_basis), tuple(out_certs) if certificates else None
    )


def standard_basis_complete(
    ideal: IdealPresentation,
    order: LocalOrder,
    limits: ResourceLimits = DEFAULT_LIMITS,
    certificates: bool = False,
):
    """Completed standard basis of the ideal for the given order.

    Combination certificates over the original generators are available
    through ``ideal.completion(order, certificates=True)``; they are skipped
    here unless requested because their bookkeeping dominates on adversarial
    inputs while every verdict needs only the basis itself.
    """
    return list(ideal.completion(order, limits, certificates).basis)


def diagram_of_ideal(
    ideal: IdealPresentation, order: LocalOrder, limits: ResourceLimits = DEFAULT_LIMITS
) -> Diagram:
    """Diagram of initial exponents, from the completed basis heads."""
    basis = ideal.completion(order, limits, certificates=False).basis
    return vertices_from_exponents(
        [initial_exponent(g, order) for g in basis], ideal.n
    )


def ideal_membership(
    f: Poly,
    ideal: IdealPresentation,
    order: LocalOrder,
    limits: ResourceLimits = DEFAULT_LIMITS,
) -> bool:
    """Zero weak-normal-form remainder against the completed basis."""
    if f.is_zero:
        return True
    basis = ideal.completion(order, limits, certificates=False).basis
    if not basis:
        return False
    return weak_normal_form(f, basis, order, limits, certificates=False).remainder.is_zero


def is_proper(
    ideal: IdealPresentation, order: LocalOrder, limits: ResourceLimits = DEFAULT_LIMITS
) -> bool:
    """True unless some completed basis element is a unit (head = origin)."""
    origin = (0,) * ideal.n
    basis = ideal.completion(order, limits, certificates=False).basis
    return all(initial_exponent(g, order) != origin for g in basis)
