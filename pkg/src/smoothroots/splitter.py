"""The splitting engine: generator sets from the number field are pushed
into the residue ring of a reducible equal-degree factor g, projected onto
the smooth component of the unit group, and tested for cyclicity by a
Pohlig-Hellman descent with baby-step/giant-step digits.  A descent that
leaves the cyclic candidate produces two order-s elements, one outside the
other's span, and those always yield a nontrivial divisor of g.

Everything is deterministic: generators are consumed in a fixed order
(unit generators first, then coordinate shells of increasing sup-norm),
and repeated runs produce byte-identical reports.
"""

import warnings
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import isqrt

from .bigmod import crt_idempotent, invmod, is_prime
from . import fpoly
from .fpoly import (
    berlekamp_complete, constant, ddf, degree, divmod_poly, encode,
    gcd as poly_gcd, invmod_poly, monic, mulmod, normalize, powmod_poly,
    rem, sort_factors, squarefree_decomposition, sub,
)
from .numberfield import FieldDescriptor, coordinate_shells, embed_mod_p, monicize
from .smoothness import SmoothnessProfile, full_factorization, least_prime_bound

DEFAULT_SMALL_PRIME_CUTOFF = 1 << 20
# linear extraction scan switches to per-block gcds above this prime
_EXTRACT_BATCH_THRESHOLD = 4096


class CyclicExhausted(Exception):
    """Every coordinate bound in the schedule passed the cyclicity test.

    Carries the full trace; at desk scale the bound schedule stands in for
    the size guarantee that kicks in only beyond some unknown prime."""

    def __init__(self, events):
        super().__init__("coordinate bound schedule exhausted without a split")
        self.events = events


class ExtractionExhausted(RuntimeError):
    """Internal invariant failure: the witness pair did not split."""


class UnsupportedPrime(ValueError):
    pass


@dataclass(frozen=True)
class SplitParams:
    """Tunables of the pipeline; the defaults satisfy the guarantee shape
    d/c + epsilon < 2*delta for the fixture degrees."""

    delta: Fraction = Fraction(1, 20)
    c: Fraction = Fraction(50)
    epsilon: Fraction = Fraction(1, 100)
    tau: Fraction = Fraction(1, 2)
    coord_bound_schedule: tuple[int, ...] = (1, 2, 4, 8, 16, 32, 64)
    small_prime_cutoff: int = DEFAULT_SMALL_PRIME_CUTOFF
    erh_mode: bool = False

    def __post_init__(self):
        sched = tuple(self.coord_bound_schedule)
        if not sched or any(b < 1 for b in sched) or list(sched) != sorted(set(sched)):
            raise ValueError("coord_bound_schedule must be strictly increasing positive ints")
        object.__setattr__(self, "delta", Fraction(self.delta))
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        object.__setattr__(self, "tau", Fraction(self.tau))
        if self.delta <= 0 or self.c <= 0 or self.epsilon <= 0:
            raise ValueError("delta, c, epsilon must be positive")

    def check_guarantee(self, d: int) -> bool:
        ok = Fraction(d) / self.c + self.epsilon < 2 * self.delta
        if not ok:
            warnings.warn(
                f"d/c + epsilon = {Fraction(d) / self.c + self.epsilon} is not below "
                f"2*delta = {2 * self.delta}; splitting may exhaust the bound schedule",
                stacklevel=2)
        return ok


@dataclass
class GroupContext:
    """Everything the cyclicity test needs about g: the common irreducible
    degree e, the factor count k, the smooth profile, the projection
    exponent onto the smooth component, and the norm-map exponent."""

    g: list[int]
    p: int
    e: int
    k: int
    profile: SmoothnessProfile
    m_proj: int
    sigma_exp: int


def build_group_context(g, e: int, p: int, profile: SmoothnessProfile) -> GroupContext:
    d_g = degree(g)
    if d_g % e != 0:
        raise ValueError(f"degree {d_g} is not a multiple of e={e}")
    S = profile.S
    rest = (p - 1) // S
    if (p - 1) % S != 0 or _gcd_int(S, rest) != 1:
        raise AssertionError("smooth part must be an exact unitary divisor of p-1")
    return GroupContext(
        g=list(g), p=p, e=e, k=d_g // e, profile=profile,
        m_proj=crt_idempotent(S, rest),
        sigma_exp=(p**e - 1) // (p - 1),
    )


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def relative_norm(b, ctx: GroupContext):
    """Field-norm map down to the prime field on every component of the
    residue ring: raise to 1 + p + ... + p^(e-1).  The image satisfies
    x^(p-1) = 1."""
    return powmod_poly(b, ctx.sigma_exp, ctx.g, ctx.p)


def project_to_smooth(a, ctx: GroupContext):
    """Idempotent projection killing the non-smooth component: raise to the
    exponent that is 1 modulo S and 0 modulo (p-1)/S.  The image has order
    dividing S."""
    return powmod_poly(a, ctx.m_proj, ctx.g, ctx.p)


def s_part_order(a, s: int, cap: int, g, p) -> int:
    """Least j with a^(s^j) = 1; errors if j would exceed cap."""
    one = constant(1, p)
    x = rem(a, g, p)
    j = 0
    while x != one:
        if j >= cap:
            raise ValueError(f"element order does not divide {s}^{cap}")
        x = powmod_poly(x, s, g, p)
        j += 1
    return j


@dataclass(frozen=True)
class NotInSubgroup:
    """Witness from a failed descent digit: a_prime has order s, b_prime has
    order s and lies outside the span of a_prime."""

    a_prime: list[int]
    b_prime: list[int]
    table_size: int


def bsgs_dlog(base, target, s: int, alpha: int, g, p):
    """Digit-by-digit discrete log of target in the span of base, where base
    has exact order s^alpha.  Each digit is solved by baby-step/giant-step
    in the order-s subgroup with a table of ceil(sqrt(s)) canonical
    encodings.  Returns the exponent, or the witness pair when some digit
    falls outside the subgroup."""
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    one = constant(1, p)
    if powmod_poly(target, s**alpha, g, p) != one:
        raise ValueError("target order does not divide the order of base")
    gamma = powmod_poly(base, s ** (alpha - 1), g, p)
    m = isqrt(s - 1) + 1
    table = {}
    cur = one
    for j in range(m):
        table.setdefault(encode(cur, p), j)
        cur = mulmod(cur, gamma, g, p)
    stride = powmod_poly(gamma, s - (m % s), g, p)  # gamma^(-m)
    base_inv = invmod_poly(base, g, p)
    order = s**alpha
    x = 0
    for k in range(alpha):
        shifted = mulmod(target, powmod_poly(base_inv, x, g, p), g, p)
        c = powmod_poly(shifted, s ** (alpha - 1 - k), g, p)
        digit = None
        probe = c
        for i in range((s + m - 1) // m):
            j = table.get(encode(probe, p))
            if j is not None and i * m + j < s:
                digit = i * m + j
                break
            probe = mulmod(probe, stride, g, p)
        if digit is None:
            return NotInSubgroup(a_prime=gamma, b_prime=c, table_size=m)
        x += digit * s**k
    return x % order


def extract_factor(a_prime, b_prime, g, s: int, p: int, batch=None):
    """Nontrivial monic divisor of g from a witness pair: some i < s makes
    b_prime * a_prime^(-i) agree with 1 on a component without being 1,
    and the gcd with g at that i splits.  Returns (divisor, i).

    The scan is linear by default; for large s it walks blocks of
    ceil(sqrt(s)) candidates, accumulating the block product and spending
    one gcd per block instead of one per candidate."""
    if batch is None:
        batch = s > _EXTRACT_BATCH_THRESHOLD
    one = constant(1, p)
    a_inv = invmod_poly(a_prime, g, p)
    d_g = degree(g)

    def proper(h):
        return 0 < degree(h) < d_g

    if not batch:
        w = rem(b_prime, g, p)
        for i in range(s):
            t = sub(w, one, p)
            if t:
                h = poly_gcd(t, g, p)
                if proper(h):
                    return h, i
            w = mulmod(w, a_inv, g, p)
        raise ExtractionExhausted("no index split g; witness preconditions violated")

    block = isqrt(s - 1) + 1
    w = rem(b_prime, g, p)
    i = 0
    while i < s:
        w_start = w
        span = min(block, s - i)
        prod = one
        for _ in range(span):
            t = sub(w, one, p)
            if t:
                prod = mulmod(prod, t, g, p)
            else:
                prod = []  # a full hit; the scan below sorts it out
            w = mulmod(w, a_inv, g, p)
        if not prod or degree(poly_gcd(prod, g, p)) > 0:
            w2 = w_start
            for off in range(span):
                t = sub(w2, one, p)
                if t:
                    h = poly_gcd(t, g, p)
                    if proper(h):
                        return h, i + off
                w2 = mulmod(w2, a_inv, g, p)
        i += span
    raise ExtractionExhausted("no index split g; witness preconditions violated")


@dataclass
class SplitReport:
    """Outcome of one cyclicity test: 'split' with a divisor, 'cyclic' when
    every prime passed, plus the event trace."""

    outcome: str
    divisor: list[int] | None = None
    events: list = dc_field(default_factory=list)


class _CyclicityState:
    """Incremental cyclicity test: per prime s of the smooth part, keep one
    element of maximal s-order seen so far; every new element must land in
    its span or the pair of order-s witnesses splits g."""

    def __init__(self, ctx: GroupContext, events: list):
        self.ctx = ctx
        self.events = events
        self.bases: dict[int, tuple[list[int], int]] = {}

    def feed(self, a, tag: str):
        """Consume one projected generator; returns a divisor or None."""
        ctx = self.ctx
        S = ctx.profile.S
        for s, v in ctx.profile.factors:
            part = powmod_poly(a, S // s**v, ctx.g, ctx.p)
            beta = s_part_order(part, s, v, ctx.g, ctx.p)
            if beta == 0:
                continue
            held = self.bases.get(s)
            if held is None:
                self.bases[s] = (part, beta)
                continue
            base, alpha = held
            if beta > alpha:
                res = bsgs_dlog(part, base, s, beta, ctx.g, ctx.p)
                if isinstance(res, NotInSubgroup):
                    return self._split(res, s, tag)
                self.bases[s] = (part, beta)
            else:
                res = bsgs_dlog(base, part, s, alpha, ctx.g, ctx.p)
                if isinstance(res, NotInSubgroup):
                    return self._split(res, s, tag)
        return None

    def _split(self, witness: NotInSubgroup, s: int, tag: str):
        ctx = self.ctx
        self.events.append({"event": "witness", "s": s, "generator": tag,
                            "bsgs_table": witness.table_size})
        divisor, i = extract_factor(witness.a_prime, witness.b_prime,
                                    ctx.g, s, ctx.p)
        self.events.append({"event": "extract", "s": s, "i": i})
        return divisor


def cyclicity_test(gens, ctx: GroupContext) -> SplitReport:
    """Batch cyclicity test over elements of the smooth component: for each
    prime s of the smooth part in ascending order, take the element of
    maximal s-order as base and descend every other element against it;
    the first witness is turned into a divisor."""
    events = []
    S = ctx.profile.S
    for s, v in ctx.profile.factors:
        parts = []
        for idx, a in enumerate(gens):
            part = powmod_poly(a, S // s**v, ctx.g, ctx.p)
            beta = s_part_order(part, s, v, ctx.g, ctx.p)
            if beta:
                parts.append((part, beta, idx))
        if not parts:
            continue
        base, alpha, base_idx = max(parts, key=lambda t: (t[1], -t[2]))
        for part, beta, idx in parts:
            if idx == base_idx:
                continue
            res = bsgs_dlog(base, part, s, alpha, ctx.g, ctx.p)
            if isinstance(res, NotInSubgroup):
                events.append({"event": "witness", "s": s, "generator": f"gen[{idx}]",
                               "bsgs_table": res.table_size})
                divisor, i = extract_factor(res.a_prime, res.b_prime, ctx.g, s, ctx.p)
                events.append({"event": "extract", "s": s, "i": i})
                return SplitReport(outcome="split", divisor=divisor, events=events)
            events.append({"event": "dlog", "s": s, "generator": f"gen[{idx}]",
                           "exponent": res})
    return SplitReport(outcome="cyclic", events=events)


def generator_stream(g, p: int, desc: FieldDescriptor, bound: int,
                     start_shell: int = 0):
    """Classified candidate generators for the residue ring mod g: unit
    generators first (only when start_shell is 0), then coordinate shells
    of sup-norm start_shell..bound.  Yields ("generator", elem, tag) for
    candidates coprime to g, ("shortcut", divisor, tag) when the gcd with g
    is proper; zero images are skipped."""
    def classify(coords, tag):
        b = embed_mod_p(coords, p, desc)
        b = rem(b, g, p)
        if not b:
            return None
        h = poly_gcd(b, g, p)
        if degree(h) == 0:
            return ("generator", b, tag)
        if degree(h) < degree(g):
            return ("shortcut", h, tag)
        return None

    if start_shell == 0:
        for idx, u in enumerate(desc.units):
            item = classify(u, f"unit[{idx}]")
            if item:
                yield item
        start_shell = 1
    for coords in coordinate_shells(bound, desc.degree, start_shell):
        item = classify(coords, "shell" + repr(tuple(coords)))
        if item:
            yield item


def split_factor(g, e: int, desc: FieldDescriptor, profile: SmoothnessProfile,
                 params: SplitParams, events: list | None = None):
    """Nontrivial monic divisor of g, where g divides the monic companion
    of the fixed polynomial mod p and all its irreducible factors have
    degree e.  Walks the coordinate bound schedule, feeding each fresh
    generator through the norm map and the smooth projection into the
    incremental cyclicity test; raises CyclicExhausted when the schedule
    ends with every test passing."""
    if events is None:
        events = []
    p = profile.p
    g = monic(normalize(g, p), p)
    if degree(g) % e != 0 or degree(g) // e < 2:
        raise ValueError("split_factor needs an equal-degree product of k >= 2 factors")
    params.check_guarantee(desc.degree)
    ctx = build_group_context(g, e, p, profile)
    state = _CyclicityState(ctx, events)
    seen: set[bytes] = set()
    prev_bound = 0
    fed = 0
    for bound in params.coord_bound_schedule:
        start_shell = 0 if prev_bound == 0 else prev_bound + 1
        for kind, payload, tag in generator_stream(g, p, desc, bound, start_shell):
            if kind == "shortcut":
                events.append({"event": "shortcut", "generator": tag,
                               "divisor": [str(c) for c in payload]})
                return payload
            key = encode(payload, p)
            if key in seen:
                continue
            seen.add(key)
            projected = project_to_smooth(relative_norm(payload, ctx), ctx)
            fed += 1
            divisor = state.feed(projected, tag)
            if divisor is not None:
                events.append({"event": "split", "generator": tag,
                               "divisor": [str(c) for c in divisor]})
                return divisor
        events.append({"event": "cyclic_pass", "bound": bound, "generators": fed})
        prev_bound = bound
    raise CyclicExhausted(events)


# ---------------------------------------------------------------------------
# the end-to-end pipeline


@dataclass
class FactorizationResult:
    p: int
    leading: int
    factors: list  # [(coefficient list, multiplicity)], canonical order
    report: dict

    def to_json(self) -> dict:
        return {
            "p": str(self.p),
            "leading": str(self.leading),
            "factors": [{"poly": [str(c) for c in poly], "multiplicity": m}
                        for poly, m in self.factors],
            "report": self.report,
        }


def _substitute_back(factors_y, lead: int, p: int):
    """Factors of the monic companion in Y become factors of f via Y = l*X,
    renormalized monic."""
    if lead % p == 1:
        return factors_y
    linv = invmod(lead, p)
    out = []
    for poly, mult in factors_y:
        d = degree(poly)
        out.append(([poly[i] * pow(linv, d - i, p) % p for i in range(d + 1)], mult))
    return out


def factor_fixed(f: list[int], p: int, desc: FieldDescriptor,
                 params: SplitParams | None = None) -> FactorizationResult:
    """Complete factorization of the fixed integer polynomial f modulo the
    odd prime p.  Small p (or p dividing the leading coefficient or the
    index) goes to the deterministic small-prime fallback; otherwise the
    monic companion is factored by squarefree and distinct-degree splitting
    plus the smooth-component splitting engine, and the change of variable
    undoes the monic substitution."""
    if params is None:
        params = SplitParams()
    if list(f) != list(desc.f):
        raise ValueError("polynomial does not match the descriptor")
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    if p < (1 << 64) and not is_prime(p):
        raise ValueError(f"{p} is not prime")
    lead = f[-1]
    events: list = []

    if p <= params.small_prime_cutoff or lead % p == 0 or desc.index % p == 0:
        if p > params.small_prime_cutoff:
            raise UnsupportedPrime(
                f"p={p} divides the leading coefficient or the index but exceeds "
                f"the small-prime cutoff {params.small_prime_cutoff}")
        fbar = normalize(f, p)
        if degree(fbar) < 1:
            report = {"path": "small_prime", "events": [{"event": "degenerate_constant"}]}
            return FactorizationResult(p=p, leading=fbar[0] if fbar else 0,
                                       factors=[], report=report)
        factors = berlekamp_complete(fbar, p, cutoff=params.small_prime_cutoff)
        report = {"path": "small_prime", "events": []}
        return FactorizationResult(p=p, leading=fbar[-1], factors=factors, report=report)

    if params.erh_mode:
        profile = None
        events.append({"event": "mode", "mode": "erh"})
    else:
        profile = least_prime_bound(p, params.tau, params.delta)
        events.append({"event": "profile", "q": str(profile.q), "S": str(profile.S)})

    f_t = monicize(f)
    F = normalize(f_t, p)
    collected = []
    for part, mult in squarefree_decomposition(F, p):
        for e, t_e in sorted(ddf(part, p).items()):
            pieces = [t_e]
            while pieces:
                piece = pieces.pop()
                if degree(piece) == e:
                    collected.append((piece, mult))
                    continue
                if params.erh_mode:
                    divisor = shoup_erh_split(piece, p, params, events)
                else:
                    divisor = split_factor(piece, e, desc, profile, params, events)
                quotient = divmod_poly(piece, divisor, p)[0]
                pieces.append(divisor)
                pieces.append(quotient)
    factors_x = sort_factors(_substitute_back(collected, lead, p))
    report = {"path": "erh" if params.erh_mode else "splitter", "events": events}
    if profile is not None:
        report["profile"] = profile.to_json()
    return FactorizationResult(p=p, leading=lead % p, factors=factors_x, report=report)


# ---------------------------------------------------------------------------
# the conditional splitter: one nonscalar prime-power element plus one
# power nonresidue generate a provably non-cyclic pair


def _element_order(v, fact, g, p):
    n = 1
    for ell, k in fact:
        n *= ell**k
    one = constant(1, p)
    for ell, _ in fact:
        while n % ell == 0 and powmod_poly(v, n // ell, g, p) == one:
            n //= ell
    return n


def nonresidue_search_cap(p: int) -> int:
    # generous stand-in for the conditional 2*ln(p)^2 bound
    approx_ln = 0.6931471805599453 * p.bit_length()
    return int(2 * approx_ln * approx_ln) + 16


def shoup_erh_split(g, p: int, params: SplitParams, events: list | None = None):
    """Split a reducible squarefree equal-degree g by pairing a nonscalar
    element of prime-power order with a power nonresidue of the prime
    field.  The nonresidue search scans 2, 3, ... under a logarithmic cap;
    exceeding the cap is reported, never silently extended."""
    if not params.erh_mode:
        raise ValueError("conditional splitter requires erh_mode")
    if events is None:
        events = []
    g = monic(normalize(g, p), p)
    table = ddf(g, p)
    if len(table) != 1:
        raise ValueError("g must have all irreducible factors of one degree")
    e = next(iter(table))
    if degree(g) == e:
        raise ValueError("g is irreducible; nothing to split")
    fact = full_factorization(p - 1)
    sigma_exp = (p**e - 1) // (p - 1)
    found = None
    for j in range(min(p, 4 * degree(g) + 64)):
        cand = rem([j % p, 1], g, p)
        h = poly_gcd(cand, g, p)
        if 0 < degree(h) < degree(g):
            events.append({"event": "shortcut", "generator": f"Y+{j}",
                           "divisor": [str(c) for c in h]})
            return h
        if degree(h) != 0:
            continue
        v = powmod_poly(cand, sigma_exp, g, p)
        n = _element_order(v, fact, g, p)
        for s, _ in fact:
            if n % s:
                continue
            vs = n
            while vs % s == 0:
                vs //= s
            w = powmod_poly(v, vs, g, p)
            if degree(w) >= 1:
                alpha = 0
                tmp = n // vs
                while tmp > 1:
                    tmp //= s
                    alpha += 1
                found = (w, s, alpha)
                break
        if found:
            events.append({"event": "erh_element", "source": f"Y+{j}", "s": found[1]})
            break
    if not found:
        raise ValueError("no nonscalar prime-power element found in the scan range")
    a_elem, s, _ = found
    v_s = 0
    n = p - 1
    while n % s == 0:
        n //= s
        v_s += 1
    cap = nonresidue_search_cap(p)
    b_val = None
    for b in range(2, cap + 1):
        if pow(b, (p - 1) // s, p) != 1:
            b_val = b
            break
    if b_val is None:
        raise ValueError(f"no degree-{s} power nonresidue found below the cap {cap}")
    events.append({"event": "nonresidue", "s": s, "b": b_val})
    b_elem = powmod_poly(constant(b_val, p), (p - 1) // s**v_s, g, p)
    res = bsgs_dlog(b_elem, a_elem, s, v_s, g, p)
    if not isinstance(res, NotInSubgroup):
        raise ExtractionExhausted("nonscalar element landed in the scalar span")
    divisor, i = extract_factor(res.a_prime, res.b_prime, g, s, p)
    events.append({"event": "extract", "s": s, "i": i})
    return divisor
